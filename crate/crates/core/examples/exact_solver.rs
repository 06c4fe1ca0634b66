// Exact and greedy covers of small graphs, including an instance read from
// JSON.

use bfcover::butterfly::ButterflyGraph;
use bfcover::graph::generators::complete_bipartite;
use bfcover::graph::CoverMode;
use bfcover::solve::io::{InstanceFile, ResultFile};
use bfcover::solve::{exact_cover, greedy_cover, krr_cover, CoverInstance, DEFAULT_BUDGET};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for r in 2..=6 {
        let g = complete_bipartite(r);
        let inst = CoverInstance::new(&g, CoverMode::Vertex)?;
        let res = exact_cover(&inst, DEFAULT_BUDGET);
        println!(
            "K_{{{r},{r}}}: exact {} ({}), greedy {}, pattern {}",
            res.cover.len(),
            res.status,
            greedy_cover(&inst).cover.len(),
            krr_cover(r)?.len()
        );
    }

    let bf = ButterflyGraph::new(3)?;
    let inst = CoverInstance::new(bf.graph(), CoverMode::Edge)?;
    let res = exact_cover(&inst, DEFAULT_BUDGET);
    println!(
        "BF(3) edges: {} candidates, optimum {} ({}), {} nodes",
        inst.candidates().len(),
        res.cover.len(),
        res.status,
        res.nodes_explored
    );

    let text = r#"{"graph": {"n": 6, "edges": [[0,1],[1,2],[2,3],[3,4],[4,5],[5,0]]}, "targets": [0, 2, 4]}"#;
    let file = InstanceFile::from_json(text)?;
    let g = file.graph.load(None)?;
    let inst = CoverInstance::with(&g, file.mode, file.candidates.clone(), file.target_list())?;
    let res = exact_cover(&inst, 10_000);
    print!(
        "6-cycle, three targets: {}",
        ResultFile::from_result(&res).to_json()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
