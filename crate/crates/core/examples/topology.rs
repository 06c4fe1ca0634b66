// Build a butterfly, look at its coordinates, colors and routes, and dump it
// as DOT.

use bfcover::butterfly::{to_dot, ButterflyCoord, ButterflyGraph};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let bf = ButterflyGraph::new(3)?;
    let g = bf.graph();
    println!(
        "BF(3): {} vertices, {} edges, {} (2,4)-edges",
        g.n(),
        g.edge_count(),
        bf.count_24_edges()
    );

    for i in 1..=4 {
        let (u, w) = (bf.u(i), bf.w(i));
        println!(
            "u{i} = {u} ({:?})   w{i} = {w} ({:?})",
            bf.color(u)?,
            bf.color(w)?
        );
    }

    // The unique shortest path from a level-0 vertex to a level-r vertex.
    let p = bf.route(ButterflyCoord::new(0, 0), ButterflyCoord::new(3, 7))?;
    let hops: Vec<String> = bf
        .coords(p.vertices())
        .iter()
        .map(|c| c.to_string())
        .collect();
    println!("route {}", hops.join(" -> "));

    // A diametral: two routes glued at a middle vertex, length 2r.
    let d = bf.diametral(bf.u(1), bf.w(1), bf.w(5))?;
    println!("diametral through u1 has length {}", d.len());
    assert_eq!(d.len(), 6);

    let dot = to_dot(&bf);
    println!(
        "{} lines of DOT, first: {}",
        dot.lines().count(),
        dot.lines().next().unwrap_or("")
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
