use std::time::Instant;
fn main() {
    let t = Instant::now();
    let n6 = plethy::graph::enumerate_genus_zero_vertices(1, 6).len();
    println!("gamma0(1,6) = {} in {:?}", n6, t.elapsed());
}
