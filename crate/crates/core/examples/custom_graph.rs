// Any connected graph works with the generic machinery: read an edge list,
// check paths, and find a minimum geodesic cover.

use bfcover::graph::generators::grid_graph;
use bfcover::graph::io::parse_edge_list;
use bfcover::graph::{is_geodesic, is_isometric_cycle, is_maximal_geodesic, CoverMode};
use bfcover::solve::{exact_cover, CoverInstance, DEFAULT_BUDGET};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    // A 6-cycle with one chord.
    let g = parse_edge_list("# hexagon\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 3\n")?;
    println!("diameter {:?}", g.diameter());
    println!("1-2-3-4 geodesic: {}", is_geodesic(&g, &[1, 2, 3, 4]));
    println!("0-1-2-3 geodesic: {}", is_geodesic(&g, &[0, 1, 2, 3]));
    println!("1-0-5 maximal: {}", is_maximal_geodesic(&g, &[1, 0, 5])?);
    println!(
        "0-1-2-3 isometric cycle: {}",
        is_isometric_cycle(&g, &[0, 1, 2, 3])?
    );

    let inst = CoverInstance::new(&g, CoverMode::Vertex)?;
    let res = exact_cover(&inst, DEFAULT_BUDGET);
    println!(
        "vertex cover of the chorded hexagon: {} paths ({})",
        res.cover.len(),
        res.status
    );

    let grid = grid_graph(3, 4);
    for mode in [CoverMode::Vertex, CoverMode::Edge] {
        let inst = CoverInstance::new(&grid, mode)?;
        let res = exact_cover(&inst, DEFAULT_BUDGET);
        println!(
            "3x4 grid, {mode} mode: {} paths ({})",
            res.cover.len(),
            res.status
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
