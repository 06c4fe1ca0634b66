// The three-stage vertex cover of BF(r) and its certificate against the
// degree-2 counting bound.

use bfcover::butterfly::ButterflyGraph;
use bfcover::construct::{construct_cover, plan};
use bfcover::solve::bf_lower_bounds;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for r in 5..=8 {
        let bf = ButterflyGraph::new(r)?;
        let p = plan(&bf)?;
        let cover = construct_cover(&bf)?;
        let report = cover.report(bf.graph());
        let (bound, _) = bf_lower_bounds(r);
        println!(
            "r={r}: stages {}+{}+{} = {} paths, lower bound {bound}, {}/{} vertices covered, case {:?}",
            p.stage1.len(),
            p.stage2.len(),
            p.stage3.len(),
            cover.len(),
            report.covered,
            report.total,
            p.case,
        );
        assert!(report.is_valid());
        assert_eq!(cover.len() as u64, bound);
    }

    // Below r = 5 the construction is not defined.
    assert!(construct_cover(&ButterflyGraph::new(4)?).is_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
