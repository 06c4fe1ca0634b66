//! Small named graph families used by tests, examples, and the solver
//! oracles.

use super::Graph;

/// Path `0 - 1 - ... - (n-1)`.
pub fn path_graph(n: usize) -> Graph {
    Graph::new(n, (1..n).map(|v| (v - 1, v))).expect("valid path")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "a cycle needs at least three vertices");
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("valid cycle")
}

/// `K_{r,r}` with sides `0..r` and `r..2r`.
pub fn complete_bipartite(r: usize) -> Graph {
    let edges = (0..r).flat_map(|x| (r..2 * r).map(move |y| (x, y)));
    Graph::new(2 * r, edges).expect("valid complete bipartite graph")
}

/// `rows x cols` grid, vertex id `i * cols + j`.
pub fn grid_graph(rows: usize, cols: usize) -> Graph {
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let v = i * cols + j;
            if j + 1 < cols {
                edges.push((v, v + 1));
            }
            if i + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    Graph::new(rows * cols, edges).expect("valid grid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        assert_eq!(path_graph(5).edge_count(), 4);
        assert_eq!(cycle_graph(6).edge_count(), 6);
        let k = complete_bipartite(3);
        assert_eq!((k.n(), k.edge_count()), (6, 9));
        assert_eq!(k.diameter(), Some(2));
        assert_eq!(grid_graph(3, 4).edge_count(), 17);
    }
}
