//! The [`Cover`] value and its JSON file format.
//!
//! ```text
//! {"r":5,"mode":"vertex","size":22,"paths":[[[3,0],[2,0],...],...]}
//! ```
//!
//! Paths are written as `[level, row]` pairs in construction order.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::butterfly::{ButterflyCoord, ButterflyGraph};
use crate::error::{Error, Result};
use crate::graph::{coverage_report, CoverMode, CoverageReport, GeodesicPath, Graph, Target};

/// A set of geodesics meant to cover a target universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cover {
    pub mode: CoverMode,
    pub paths: Vec<GeodesicPath>,
    /// `None` means every vertex (or every edge) of the graph.
    pub targets: Option<Vec<Target>>,
}

impl Cover {
    pub fn new(mode: CoverMode, paths: Vec<GeodesicPath>) -> Self {
        Cover {
            mode,
            paths,
            targets: None,
        }
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn report(&self, g: &Graph) -> CoverageReport {
        coverage_report(g, &self.paths, self.mode, self.targets.as_deref())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverFile {
    pub r: u32,
    pub mode: CoverMode,
    pub size: usize,
    pub paths: Vec<Vec<ButterflyCoord>>,
}

impl CoverFile {
    pub fn from_cover(bf: &ButterflyGraph, cover: &Cover) -> Self {
        CoverFile {
            r: bf.r(),
            mode: cover.mode,
            size: cover.len(),
            paths: cover
                .paths
                .iter()
                .map(|p| bf.coords(p.vertices()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(self).expect("cover serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: CoverFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        if file.size != file.paths.len() {
            return Err(Error::Parse(format!(
                "size field says {} but {} paths are listed",
                file.size,
                file.paths.len()
            )));
        }
        Ok(file)
    }

    /// Vertex-id sequences in `bf`, without the geodesic check; feed them to
    /// [`coverage_report`] to find out which are valid.
    pub fn raw_paths(&self, bf: &ButterflyGraph) -> Result<Vec<Vec<usize>>> {
        self.paths
            .iter()
            .map(|p| p.iter().map(|&c| bf.checked_id(c)).collect())
            .collect()
    }

    /// Same as [`CoverFile::raw_paths`] but resolving `L<j>R<s>` labels of an
    /// arbitrary labelled graph.
    pub fn raw_paths_in(&self, g: &Graph) -> Result<Vec<Vec<usize>>> {
        let rows = 1u64 << self.r;
        let index: Option<HashMap<&str, usize>> = g.labels().map(|ls| {
            ls.iter()
                .enumerate()
                .map(|(i, l)| (l.as_str(), i))
                .collect()
        });
        self.paths
            .iter()
            .map(|p| {
                p.iter()
                    .map(|&c| match &index {
                        Some(index) => {
                            index
                                .get(c.label().as_str())
                                .copied()
                                .ok_or(Error::BadCoord {
                                    level: c.level,
                                    row: c.row,
                                })
                        }
                        None => {
                            let id = c.level as u64 * rows + c.row;
                            if c.row < rows && (id as usize) < g.n() {
                                Ok(id as usize)
                            } else {
                                Err(Error::BadCoord {
                                    level: c.level,
                                    row: c.row,
                                })
                            }
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape() {
        let bf = ButterflyGraph::new(2).unwrap();
        let p = bf.diametral(bf.u(1), bf.w(1), bf.w(3)).unwrap();
        let cover = Cover::new(CoverMode::Vertex, vec![p]);
        let file = CoverFile::from_cover(&bf, &cover);
        assert_eq!(
            file.to_json(),
            "{\"r\":2,\"mode\":\"vertex\",\"size\":1,\"paths\":[[[2,0],[1,0],[0,0],[1,2],[2,2]]]}\n"
        );
        let back = CoverFile::from_json(&file.to_json()).unwrap();
        assert_eq!(back, file);
        assert_eq!(back.raw_paths(&bf).unwrap()[0], cover.paths[0].vertices());
    }

    #[test]
    fn size_mismatch_rejected() {
        let text = r#"{"r":2,"mode":"edge","size":3,"paths":[]}"#;
        assert!(CoverFile::from_json(text).is_err());
    }
}
