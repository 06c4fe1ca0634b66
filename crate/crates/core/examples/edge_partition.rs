// Partition the edges of BF(r) into isometric 4r-cycles, then cut each
// cycle into two diametrals for an optimal edge cover.

use bfcover::butterfly::ButterflyGraph;
use bfcover::partition::{edge_cycle_partition, split_to_diametrals, IsometryCheck, PartitionFile};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for r in 3..=6 {
        let bf = ButterflyGraph::new(r)?;
        let part = edge_cycle_partition(r)?;
        part.verify(&bf, IsometryCheck::Full)?;
        let paths = split_to_diametrals(&part, &bf)?;
        let report = paths.report(bf.graph());
        println!(
            "r={r}: {} cycles of length {}, {} diametrals, edge partition: {}",
            part.cycles.len(),
            4 * r,
            paths.len(),
            report.is_partition()
        );
        assert_eq!(paths.len(), 1 << r);
    }

    let bf = ButterflyGraph::new(3)?;
    let part = edge_cycle_partition(3)?;
    let (a, b) = part.cycles[0].anchors();
    println!(
        "first BF(3) cycle anchored at {} and {}",
        bf.coord(a),
        bf.coord(b)
    );
    let json = PartitionFile::new(&bf, Some(&part), None).to_json();
    println!("partition file is {} bytes", json.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
