macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(topology, "topology.rs", topology_example_runs);
example!(vertex_cover, "vertex_cover.rs", vertex_cover_example_runs);
example!(
    edge_partition,
    "edge_partition.rs",
    edge_partition_example_runs
);
example!(exact_solver, "exact_solver.rs", exact_solver_example_runs);
example!(invariant_checks, "invariant_checks.rs", invariant_checks_example_runs);
example!(custom_graph, "custom_graph.rs", custom_graph_example_runs);
