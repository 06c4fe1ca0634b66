// Scan every maximal geodesic of BF(3) and tabulate how many boundary
// vertices and (2,4)-edges a single geodesic can reach.

use bfcover::butterfly::ButterflyGraph;
use bfcover::graph::{enumerate_maximal_geodesics, DEFAULT_ENUM_GUARD};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let bf = ButterflyGraph::new(3)?;
    let g = bf.graph();
    let paths = enumerate_maximal_geodesics(g, DEFAULT_ENUM_GUARD)?;
    let mut most_deg2 = 0;
    let mut most_24 = 0;
    let mut most_level0 = 0;
    for p in &paths {
        let v = p.vertices();
        most_deg2 = most_deg2.max(v.iter().filter(|&&x| g.degree(x) == 2).count());
        most_24 = most_24.max(p.edges().filter(|&(a, b)| bf.is_24_edge(a, b)).count());
        most_level0 = most_level0.max(v.iter().filter(|&&x| bf.coord(x).level == 0).count());
    }
    println!("{} maximal geodesics in BF(3)", paths.len());
    println!("at most {most_level0} level-0 vertices, {most_deg2} degree-2 vertices, {most_24} (2,4)-edges per geodesic");
    assert_eq!((most_level0, most_deg2, most_24), (2, 3, 4));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
