//! Brute-force enumeration of stable graphs of genus at most one, used as
//! an independent oracle for the generating-function pipelines.
//!
//! A stable graph has genus-labelled vertices, edges given by an
//! involution on flags (half-edges), and totally ordered legs; every
//! vertex satisfies `2(g(v)-1) + n(v) > 0` and the graph genus is the sum
//! of vertex genera plus the first Betti number. Enumeration works on a
//! multigraph encoding (edge multiplicities plus a leg-to-vertex map) and
//! deduplicates by a canonical form: vertices are first bucketed by an
//! isomorphism invariant, then the encoding is minimized over
//! bucket-preserving relabelings. Correctness beats speed here; the sizes
//! involved (n <= 6, genus <= 1) stay tiny.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::coeff::Rat;
use crate::partition::Partition;
use crate::symf::SymFunc;
use crate::vpoly::VPoly;

/// A stable graph in flag form. Flags are numbered `0..F`; `involution`
/// fixes leg flags and swaps the two flags of each edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StableGraph {
    genus: Vec<u8>,
    flag_vertex: Vec<usize>,
    involution: Vec<usize>,
    legs: Vec<usize>,
}

impl StableGraph {
    pub fn vertex_count(&self) -> usize {
        self.genus.len()
    }

    pub fn genus_of(&self, v: usize) -> u8 {
        self.genus[v]
    }

    /// Number of flags at vertex `v` (valence including legs).
    pub fn valence(&self, v: usize) -> u32 {
        self.flag_vertex.iter().filter(|&&w| w == v).count() as u32
    }

    /// Total genus: vertex genera plus the first Betti number.
    pub fn total_genus(&self) -> u32 {
        let edges = self
            .involution
            .iter()
            .enumerate()
            .filter(|&(f, &g)| f < g)
            .count();
        let betti = edges as i64 - self.genus.len() as i64 + 1;
        self.genus.iter().map(|&g| g as u32).sum::<u32>() + betti as u32
    }

    pub fn leg_count(&self) -> usize {
        self.legs.len()
    }

    /// Order of the automorphism group: flag permutations preserving
    /// vertices, genera and the involution, and fixing every leg.
    ///
    /// Such automorphisms project onto vertex automorphisms; the kernel
    /// acting trivially on vertices permutes parallel edges (`m!` per
    /// multiplicity-`m` bundle) and flips or permutes loops (`2^l l!` for
    /// `l` loops at a vertex).
    pub fn aut_order(&self) -> u64 {
        let mg = self.to_multigraph();
        mg.aut_order()
    }

    fn to_multigraph(&self) -> MultiGraph {
        let mut edges: BTreeMap<(usize, usize), u32> = BTreeMap::new();
        for (f, &g) in self.involution.iter().enumerate() {
            if f < g {
                let (u, v) = (self.flag_vertex[f], self.flag_vertex[g]);
                *edges.entry((u.min(v), u.max(v))).or_insert(0) += 1;
            }
        }
        MultiGraph {
            genus: self.genus.clone(),
            edges: edges.into_iter().map(|((u, v), m)| (u, v, m)).collect(),
            leg_at: self.legs.iter().map(|&f| self.flag_vertex[f]).collect(),
        }
    }

    /// JSON dump: vertices with their flag lists, the involution as flag
    /// pairs, and the legs as a flag-index list in label order.
    pub fn to_json(&self) -> serde_json::Value {
        let vertices: Vec<serde_json::Value> = (0..self.vertex_count())
            .map(|v| {
                let flags: Vec<usize> = self
                    .flag_vertex
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| w == v)
                    .map(|(f, _)| f)
                    .collect();
                serde_json::json!({"g": self.genus[v], "flags": flags})
            })
            .collect();
        let pairs: Vec<[usize; 2]> = self
            .involution
            .iter()
            .enumerate()
            .filter(|&(f, &g)| f < g)
            .map(|(f, &g)| [f, g])
            .collect();
        serde_json::json!({
            "vertices": vertices,
            "involution": pairs,
            "legs": self.legs,
        })
    }
}

/// Multigraph encoding: genus per vertex, sorted `(u, v, multiplicity)`
/// edge bundles with `u <= v` (loops as `u = v`), and the vertex carrying
/// each leg label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct MultiGraph {
    genus: Vec<u8>,
    edges: Vec<(usize, usize, u32)>,
    leg_at: Vec<usize>,
}

impl MultiGraph {
    fn vertex_count(&self) -> usize {
        self.genus.len()
    }

    fn degrees(&self) -> Vec<u32> {
        let mut deg = vec![0u32; self.vertex_count()];
        for &(u, v, m) in &self.edges {
            if u == v {
                deg[u] += 2 * m;
            } else {
                deg[u] += m;
                deg[v] += m;
            }
        }
        deg
    }

    fn valences(&self) -> Vec<u32> {
        let mut val = self.degrees();
        for &v in &self.leg_at {
            val[v] += 1;
        }
        val
    }

    fn relabeled(&self, perm: &[usize]) -> MultiGraph {
        let mut genus = vec![0u8; self.vertex_count()];
        for (v, &g) in self.genus.iter().enumerate() {
            genus[perm[v]] = g;
        }
        let mut edges: Vec<(usize, usize, u32)> = self
            .edges
            .iter()
            .map(|&(u, v, m)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b), m)
            })
            .collect();
        edges.sort_unstable();
        MultiGraph {
            genus,
            edges,
            leg_at: self.leg_at.iter().map(|&v| perm[v]).collect(),
        }
    }

    /// Invariant used to bucket vertices before canonical search.
    fn vertex_invariants(&self) -> Vec<(u8, u32, u32, Vec<usize>)> {
        let deg = self.degrees();
        let mut loops = vec![0u32; self.vertex_count()];
        for &(u, v, m) in &self.edges {
            if u == v {
                loops[u] += m;
            }
        }
        (0..self.vertex_count())
            .map(|v| {
                let labels: Vec<usize> = self
                    .leg_at
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| w == v)
                    .map(|(i, _)| i)
                    .collect();
                (self.genus[v], deg[v], loops[v], labels)
            })
            .collect()
    }

    fn invariant_blocks(&self) -> Vec<Vec<usize>> {
        let inv = self.vertex_invariants();
        let mut order: Vec<usize> = (0..self.vertex_count()).collect();
        order.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &v in &order {
            match blocks.last() {
                Some(b) if inv[b[0]] == inv[v] => blocks.last_mut().unwrap().push(v),
                _ => blocks.push(vec![v]),
            }
        }
        blocks
    }

    /// Canonical representative: minimum encoding over relabelings that
    /// respect the vertex-invariant refinement. Vertices of the `i`-th
    /// invariant block are sent to the `i`-th run of new indices, in every
    /// possible order within each block.
    fn canonical(&self) -> MultiGraph {
        let blocks = self.invariant_blocks();
        let mut best: Option<MultiGraph> = None;
        let mut perm = vec![0usize; self.vertex_count()];
        for_each_block_relabeling(&blocks, 0, 0, &mut perm, &mut |perm| {
            let cand = self.relabeled(perm);
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        });
        best.unwrap()
    }

    fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 1 {
            return true;
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v, m) in &self.edges {
            if u != v && m > 0 {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// See [`StableGraph::aut_order`].
    fn aut_order(&self) -> u64 {
        let blocks = self.invariant_blocks();
        let mut count = 0u64;
        let me = self.sorted_edges();
        let mut perm = vec![0usize; self.vertex_count()];
        for_each_block_bijection(&blocks, 0, &mut perm, &mut |perm| {
            let cand = self.relabeled(perm);
            if cand.leg_at == self.leg_at && cand.sorted_edges() == me && cand.genus == self.genus {
                count += 1;
            }
        });
        let mut kernel = 1u64;
        for &(u, v, m) in &self.edges {
            if u == v {
                kernel *= (1u64 << m) * factorial(m as u64);
            } else {
                kernel *= factorial(m as u64);
            }
        }
        count * kernel
    }

    fn sorted_edges(&self) -> Vec<(usize, usize, u32)> {
        let mut e = self.edges.clone();
        e.sort_unstable();
        e
    }

    fn to_stable_graph(&self) -> StableGraph {
        let n_legs = self.leg_at.len();
        let mut flag_vertex = Vec::new();
        let mut legs = vec![0usize; n_legs];
        // legs first, in label order
        for (label, &v) in self.leg_at.iter().enumerate() {
            legs[label] = flag_vertex.len();
            flag_vertex.push(v);
        }
        let mut involution: Vec<usize> = (0..n_legs).collect();
        for &(u, v, m) in &self.edges {
            for _ in 0..m {
                let a = flag_vertex.len();
                flag_vertex.push(u);
                let b = flag_vertex.len();
                flag_vertex.push(v);
                involution.push(b);
                involution.push(a);
            }
        }
        StableGraph {
            genus: self.genus.clone(),
            flag_vertex,
            involution,
            legs,
        }
    }
}

fn factorial(n: u64) -> u64 {
    (1..=n).product::<u64>().max(1)
}

// Every bijection of the vertex set mapping each invariant block onto
// itself, as `perm[old] = old'`.
fn for_each_block_bijection<F: FnMut(&[usize])>(
    blocks: &[Vec<usize>],
    idx: usize,
    perm: &mut Vec<usize>,
    visit: &mut F,
) {
    if idx == blocks.len() {
        visit(perm);
        return;
    }
    let block = blocks[idx].clone();
    let mut arranged = block.clone();
    for_each_arrangement(&mut arranged, 0, &mut |arr| {
        for (i, &member) in block.iter().enumerate() {
            perm[member] = arr[i];
        }
        for_each_block_bijection(blocks, idx + 1, perm, visit);
    });
}

// Every relabeling sending the members of block `i` onto the `i`-th run
// of consecutive new indices, as `perm[old] = new`.
fn for_each_block_relabeling<F: FnMut(&[usize])>(
    blocks: &[Vec<usize>],
    idx: usize,
    offset: usize,
    perm: &mut Vec<usize>,
    visit: &mut F,
) {
    if idx == blocks.len() {
        visit(perm);
        return;
    }
    let len = blocks[idx].len();
    let mut arranged = blocks[idx].clone();
    for_each_arrangement(&mut arranged, 0, &mut |arr| {
        for (i, &member) in arr.iter().enumerate() {
            perm[member] = offset + i;
        }
        for_each_block_relabeling(blocks, idx + 1, offset + len, perm, visit);
    });
}

fn for_each_arrangement<F: FnMut(&[usize])>(items: &mut Vec<usize>, i: usize, visit: &mut F) {
    if i == items.len() {
        visit(items);
        return;
    }
    for j in i..items.len() {
        items.swap(i, j);
        for_each_arrangement(items, i + 1, visit);
        items.swap(i, j);
    }
}

/// All isomorphism classes of stable graphs of genus `g` with `n` totally
/// ordered legs, one canonical representative each.
pub fn enumerate(g: u8, n: u32) -> Vec<StableGraph> {
    enumerate_multigraphs(g, n, false)
        .into_iter()
        .map(|mg| mg.to_stable_graph())
        .collect()
}

/// Classes of genus `g` with every vertex of genus zero.
pub fn enumerate_genus_zero_vertices(g: u8, n: u32) -> Vec<StableGraph> {
    enumerate_multigraphs(g, n, true)
        .into_iter()
        .map(|mg| mg.to_stable_graph())
        .collect()
}

fn enumerate_multigraphs(g: u8, n: u32, only_genus_zero: bool) -> Vec<MultiGraph> {
    assert!(g <= 1, "only genus 0 and 1 are enumerated");
    assert!(2 * (g as i64 - 1) + n as i64 > 0, "unstable (g, n)");
    let mut seen: BTreeSet<MultiGraph> = BTreeSet::new();

    let max_v = n.max(1) as usize;
    for v_count in 1..=max_v {
        // genus profiles: all zeros with Betti number g, or (for genus
        // one) vertex 0 of genus one in a tree; every class containing a
        // genus-one vertex has a representative with it at index 0.
        let mut profiles: Vec<(Vec<u8>, usize)> = Vec::new();
        if g == 1 {
            profiles.push((vec![0; v_count], v_count)); // one circuit
            if !only_genus_zero {
                let mut p = vec![0; v_count];
                p[0] = 1;
                profiles.push((p, v_count - 1)); // tree with one elliptic vertex
            }
        } else {
            profiles.push((vec![0; v_count], v_count - 1)); // tree
        }

        for (genus, e_count) in profiles {
            if g == 0 && v_count > (n as usize).saturating_sub(2) {
                continue;
            }
            let mut slots: Vec<(usize, usize)> = Vec::new();
            for u in 0..v_count {
                for w in u..v_count {
                    slots.push((u, w));
                }
            }
            let mut counts = vec![0u32; slots.len()];
            distribute_edges(&slots, &mut counts, 0, e_count as u32, &mut |counts| {
                let mut edges = Vec::new();
                for (i, &m) in counts.iter().enumerate() {
                    if m > 0 {
                        edges.push((slots[i].0, slots[i].1, m));
                    }
                }
                let proto = MultiGraph { genus: genus.clone(), edges, leg_at: Vec::new() };
                if !proto.is_connected() {
                    return;
                }
                let deg = proto.degrees();
                // minimum legs to stabilize each vertex
                let deficits: Vec<u32> = (0..v_count)
                    .map(|v| {
                        let min_flags = if genus[v] == 1 { 1 } else { 3 };
                        (min_flags as u32).saturating_sub(deg[v])
                    })
                    .collect();
                if deficits.iter().sum::<u32>() > n {
                    return;
                }
                assign_legs(&proto, &deficits, n, &mut seen);
            });
        }
    }
    seen.into_iter().collect()
}

fn distribute_edges<F: FnMut(&[u32])>(
    slots: &[(usize, usize)],
    counts: &mut Vec<u32>,
    idx: usize,
    remaining: u32,
    visit: &mut F,
) {
    if idx == slots.len() {
        if remaining == 0 {
            visit(counts);
        }
        return;
    }
    for m in 0..=remaining {
        counts[idx] = m;
        distribute_edges(slots, counts, idx + 1, remaining - m, visit);
    }
    counts[idx] = 0;
}

fn assign_legs(proto: &MultiGraph, deficits: &[u32], n: u32, seen: &mut BTreeSet<MultiGraph>) {
    let v_count = proto.vertex_count();
    let mut leg_at = vec![0usize; n as usize];
    fn rec(
        proto: &MultiGraph,
        deficits: &[u32],
        leg_at: &mut Vec<usize>,
        label: usize,
        legs_so_far: &mut Vec<u32>,
        seen: &mut BTreeSet<MultiGraph>,
    ) {
        let n = leg_at.len();
        if label == n {
            if deficits.iter().zip(legs_so_far.iter()).any(|(&d, &have)| have < d) {
                return;
            }
            let mut mg = proto.clone();
            mg.leg_at = leg_at.clone();
            seen.insert(mg.canonical());
            return;
        }
        let remaining = (n - label) as u32;
        let deficit_left: u32 = deficits
            .iter()
            .zip(legs_so_far.iter())
            .map(|(&d, &have)| d.saturating_sub(have))
            .sum();
        if deficit_left > remaining {
            return;
        }
        for v in 0..proto.vertex_count() {
            leg_at[label] = v;
            legs_so_far[v] += 1;
            rec(proto, deficits, leg_at, label + 1, legs_so_far, seen);
            legs_so_far[v] -= 1;
        }
    }
    let mut legs_so_far = vec![0u32; v_count];
    rec(proto, deficits, &mut leg_at, 0, &mut legs_so_far, seen);
}

/// The graph-sum polynomial `sum_G (1/|Aut G|) prod_v v_{g(v), n(v)}`
/// over isomorphism classes of stable graphs of genus `g` with `n` legs.
pub fn m_polynomial(g: u8, n: u32) -> VPoly {
    use crate::series::Scalar;
    let mut acc = VPoly::zero();
    for mg in enumerate_multigraphs(g, n, false) {
        let vals = mg.valences();
        let types: Vec<(u8, u32)> = (0..mg.vertex_count()).map(|v| (mg.genus[v], vals[v])).collect();
        let weight = Rat::new(1.into(), BigInt::from(mg.aut_order()));
        acc = acc.ring_add(&VPoly::monomial(&types, weight));
    }
    acc
}

/// Frobenius characteristic of the permutation action of `S_n` on
/// isomorphism classes of genus-one stable graphs with genus-zero
/// vertices: `sum_mu fix(mu) p_mu / z_mu`, with `fix(mu)` the number of
/// classes invariant under a leg relabeling of cycle type `mu`.
pub fn perm_character(n: u32) -> SymFunc {
    let classes = enumerate_multigraphs(1, n, true);
    let mut ch = SymFunc::zero(n as usize);
    for mu in Partition::all(n) {
        let sigma = permutation_of_type(&mu, n as usize);
        let mut fixed = 0i64;
        for mg in &classes {
            // classes are stored canonically, so "fixed" is equality of
            // canonical forms after relabeling
            let mut relabeled = mg.clone();
            relabeled.leg_at = (0..n as usize).map(|i| mg.leg_at[sigma[i]]).collect();
            if relabeled.canonical() == *mg {
                fixed += 1;
            }
        }
        if fixed != 0 {
            ch = ch.add(&SymFunc::p_mu(&mu, n as usize).scale_rat(&Rat::new(fixed.into(), mu.z())));
        }
    }
    ch
}

/// Number of orbits of leg relabelings on those classes (classes of
/// graphs with unordered legs), for Burnside cross-checks.
pub fn unordered_leg_classes(n: u32) -> usize {
    let classes = enumerate_multigraphs(1, n, true);
    let mut reps: BTreeSet<MultiGraph> = BTreeSet::new();
    let perms = all_permutations(n as usize);
    for mg in &classes {
        let mut best: Option<MultiGraph> = None;
        for sigma in &perms {
            let mut relabeled = mg.clone();
            relabeled.leg_at = (0..n as usize).map(|i| mg.leg_at[sigma[i]]).collect();
            let canon = relabeled.canonical();
            if best.as_ref().map_or(true, |b| canon < *b) {
                best = Some(canon);
            }
        }
        reps.insert(best.unwrap());
    }
    reps.len()
}

fn permutation_of_type(mu: &Partition, n: usize) -> Vec<usize> {
    let mut sigma: Vec<usize> = (0..n).collect();
    let mut start = 0usize;
    for &part in mu.parts() {
        let p = part as usize;
        for i in 0..p {
            sigma[start + i] = start + (i + 1) % p;
        }
        start += p;
    }
    sigma
}

fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    fn heap(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(cur.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, cur, out);
            if k % 2 == 0 {
                cur.swap(i, k - 1);
            } else {
                cur.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::rat;

    #[test]
    fn small_class_counts() {
        assert_eq!(enumerate(0, 3).len(), 1);
        assert_eq!(enumerate(0, 4).len(), 4);
        // genus one, two legs: five classes in total, three with all
        // vertices of genus zero
        assert_eq!(enumerate(1, 2).len(), 5);
        assert_eq!(enumerate_genus_zero_vertices(1, 2).len(), 3);
        assert_eq!(enumerate_genus_zero_vertices(1, 1).len(), 1);
        assert_eq!(enumerate_genus_zero_vertices(1, 3).len(), 15);
        assert_eq!(enumerate_genus_zero_vertices(1, 4).len(), 111);
    }

    #[test]
    fn graphs_are_stable_and_correct_genus() {
        for g in enumerate(1, 3) {
            assert_eq!(g.total_genus(), 1);
            assert_eq!(g.leg_count(), 3);
            for v in 0..g.vertex_count() {
                let stability = 2 * (g.genus_of(v) as i64 - 1) + g.valence(v) as i64;
                assert!(stability > 0);
            }
        }
    }

    #[test]
    fn automorphism_orders() {
        // single genus-zero vertex with a loop and one leg: the loop flip
        for g in enumerate(1, 1) {
            if g.vertex_count() == 1 && g.genus_of(0) == 0 {
                assert_eq!(g.aut_order(), 2);
            }
            // single genus-one vertex with one leg
            if g.vertex_count() == 1 && g.genus_of(0) == 1 {
                assert_eq!(g.aut_order(), 1);
            }
        }
        // double edge between two trivalent vertices, one leg each
        let found = enumerate(1, 2).into_iter().any(|g| {
            g.vertex_count() == 2
                && g.genus_of(0) == 0
                && g.genus_of(1) == 0
                && g.valence(0) == 3
                && g.valence(1) == 3
                && g.aut_order() == 2
        });
        assert!(found);
    }

    #[test]
    fn m_polynomials_match_hand_tables() {
        let m = m_polynomial(0, 4);
        assert_eq!(m.coefficient(&[(0, 4)]), rat(1, 1));
        assert_eq!(m.coefficient(&[(0, 3), (0, 3)]), rat(3, 1));

        let m = m_polynomial(0, 5);
        assert_eq!(m.coefficient(&[(0, 5)]), rat(1, 1));
        assert_eq!(m.coefficient(&[(0, 4), (0, 3)]), rat(10, 1));
        assert_eq!(m.coefficient(&[(0, 3), (0, 3), (0, 3)]), rat(15, 1));

        let m = m_polynomial(1, 1);
        assert_eq!(m.coefficient(&[(1, 1)]), rat(1, 1));
        assert_eq!(m.coefficient(&[(0, 3)]), rat(1, 2));

        // the two-leg table: the v03^2 weight is 1, split over two graphs
        let m = m_polynomial(1, 2);
        assert_eq!(m.coefficient(&[(1, 2)]), rat(1, 1));
        assert_eq!(m.coefficient(&[(1, 1), (0, 3)]), rat(1, 1));
        assert_eq!(m.coefficient(&[(0, 4)]), rat(1, 2));
        assert_eq!(m.coefficient(&[(0, 3), (0, 3)]), rat(1, 1));
    }

    #[test]
    fn permutation_characters() {
        let s = |parts: &[u32]| Partition::new(parts.to_vec());
        // n = 1: a single class
        assert_eq!(perm_character(1), SymFunc::schur(&s(&[1]), 1));
        // n = 2: three classes, all fixed by the swap
        assert_eq!(
            perm_character(2),
            SymFunc::schur(&s(&[2]), 2).scale_rat(&rat(3, 1))
        );
        // n = 3: 7 s3 + 4 s21
        let expect = SymFunc::schur(&s(&[3]), 3)
            .scale_rat(&rat(7, 1))
            .add(&SymFunc::schur(&s(&[2, 1]), 3).scale_rat(&rat(4, 1)));
        assert_eq!(perm_character(3), expect);
    }

    #[test]
    fn burnside_orbit_count() {
        for n in 1..=4u32 {
            let ch = perm_character(n);
            let trivial = ch.to_schur().get(&Partition::row(n)).cloned().unwrap_or_default();
            let orbits = unordered_leg_classes(n);
            assert_eq!(trivial, crate::coeff::Coeff::from_int(orbits as i64), "n = {}", n);
        }
    }

    #[test]
    fn json_dump_shape() {
        let graphs = enumerate(1, 1);
        let loop_graph = graphs
            .iter()
            .find(|g| g.vertex_count() == 1 && g.genus_of(0) == 0)
            .unwrap();
        let j = loop_graph.to_json();
        assert_eq!(j["legs"].as_array().unwrap().len(), 1);
        assert_eq!(j["involution"].as_array().unwrap().len(), 1);
        assert_eq!(j["vertices"][0]["g"], 0);
    }
}
