//! Textual graph specs: `path:N`, `cycle:N`, `grid:RxN`, `cylinder:RxN`,
//! `product:SPEC*SPEC`, `file:PATH`.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use sgeo_core::{build_cycle, build_path, cartesian_product, Graph, LayerLabeling};

use crate::CliError;

/// Largest graph any spec may expand to.
pub const MAX_VERTICES: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Path(usize),
    Cycle(usize),
    Grid { r: usize, n: usize },
    Cylinder { r: usize, n: usize },
    Product(Box<GraphSpec>, Box<GraphSpec>),
    File(PathBuf),
}

/// The thin-product family a spec belongs to, when it has one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Grid { r: usize, n: usize },
    Cylinder { r: usize, n: usize },
}

pub struct BuiltGraph {
    pub graph: Graph,
    pub labeling: Option<LayerLabeling>,
    pub family: Option<Family>,
}

fn parse_count(s: &str, what: &str) -> Result<usize, CliError> {
    let v: usize = s
        .parse()
        .map_err(|_| CliError::Usage(format!("invalid {what} {s:?}")))?;
    if v == 0 || v > MAX_VERTICES {
        return Err(CliError::Usage(format!(
            "{what} must be in [1, {MAX_VERTICES}], got {v}"
        )));
    }
    Ok(v)
}

fn parse_dims(s: &str) -> Result<(usize, usize), CliError> {
    let (r, n) = s
        .split_once(['x', 'X'])
        .ok_or_else(|| CliError::Usage(format!("expected RxN, got {s:?}")))?;
    Ok((parse_count(r, "R")?, parse_count(n, "N")?))
}

impl FromStr for GraphSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| CliError::Usage(format!("graph spec {s:?} has no kind prefix")))?;
        match kind {
            "path" => Ok(GraphSpec::Path(parse_count(rest, "path order")?)),
            "cycle" => Ok(GraphSpec::Cycle(parse_count(rest, "cycle order")?)),
            "grid" => {
                let (r, n) = parse_dims(rest)?;
                Ok(GraphSpec::Grid { r, n })
            }
            "cylinder" => {
                let (r, n) = parse_dims(rest)?;
                Ok(GraphSpec::Cylinder { r, n })
            }
            "product" => {
                let (a, b) = rest.split_once('*').ok_or_else(|| {
                    CliError::Usage(format!("product spec {rest:?} needs SPEC*SPEC"))
                })?;
                Ok(GraphSpec::Product(
                    Box::new(a.parse()?),
                    Box::new(b.parse()?),
                ))
            }
            "file" if !rest.is_empty() => Ok(GraphSpec::File(PathBuf::from(rest))),
            _ => Err(CliError::Usage(format!("unknown graph spec {s:?}"))),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Path(n) => write!(f, "path:{n}"),
            GraphSpec::Cycle(n) => write!(f, "cycle:{n}"),
            GraphSpec::Grid { r, n } => write!(f, "grid:{r}x{n}"),
            GraphSpec::Cylinder { r, n } => write!(f, "cylinder:{r}x{n}"),
            GraphSpec::Product(a, b) => write!(f, "product:{a}*{b}"),
            GraphSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl GraphSpec {
    pub fn build(&self) -> Result<BuiltGraph, CliError> {
        let plain = |graph| BuiltGraph {
            graph,
            labeling: None,
            family: None,
        };
        match self {
            GraphSpec::Path(n) => Ok(plain(build_path(*n)?)),
            GraphSpec::Cycle(n) => Ok(plain(build_cycle(*n)?)),
            GraphSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
                Ok(plain(Graph::from_edge_list(&text)?))
            }
            GraphSpec::Grid { r, n } | GraphSpec::Cylinder { r, n } => {
                check_size(*r, *n)?;
                let short = match self {
                    GraphSpec::Grid { .. } => build_path(*n)?,
                    _ => build_cycle(*n)?,
                };
                let (graph, labeling) = cartesian_product(&build_path(*r)?, &short)?;
                let family = match self {
                    GraphSpec::Grid { .. } => Family::Grid { r: *r, n: *n },
                    _ => Family::Cylinder { r: *r, n: *n },
                };
                Ok(BuiltGraph {
                    graph,
                    labeling: Some(labeling),
                    family: Some(family),
                })
            }
            GraphSpec::Product(a, b) => {
                let (a, b) = (a.build()?, b.build()?);
                check_size(a.graph.vertex_count(), b.graph.vertex_count())?;
                let (graph, labeling) = cartesian_product(&a.graph, &b.graph)?;
                Ok(BuiltGraph {
                    graph,
                    labeling: Some(labeling),
                    family: None,
                })
            }
        }
    }
}

fn check_size(a: usize, b: usize) -> Result<(), CliError> {
    match a.checked_mul(b) {
        Some(v) if v <= MAX_VERTICES => Ok(()),
        _ => Err(CliError::Usage(format!(
            "product of {a} and {b} vertices exceeds {MAX_VERTICES}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        assert_eq!("path:5".parse::<GraphSpec>().unwrap(), GraphSpec::Path(5));
        assert_eq!(
            "grid:7x2".parse::<GraphSpec>().unwrap(),
            GraphSpec::Grid { r: 7, n: 2 }
        );
        let p: GraphSpec = "product:path:3*cycle:4".parse().unwrap();
        assert_eq!(p.to_string(), "product:path:3*cycle:4");
        let built = p.build().unwrap();
        assert_eq!(built.graph.vertex_count(), 12);
        assert!(built.family.is_none());
        for bad in [
            "",
            "path",
            "path:0",
            "path:x",
            "grid:7",
            "grid:0x3",
            "torus:3x3",
            "file:",
            "product:path:3",
        ] {
            assert!(bad.parse::<GraphSpec>().is_err(), "{bad}");
        }
        assert!("cycle:2".parse::<GraphSpec>().unwrap().build().is_err());
        assert!("grid:2000x2000"
            .parse::<GraphSpec>()
            .unwrap()
            .build()
            .is_err());
    }

    #[test]
    fn grid_carries_family_and_labeling() {
        let built = "cylinder:5x4"
            .parse::<GraphSpec>()
            .unwrap()
            .build()
            .unwrap();
        assert_eq!(built.family, Some(Family::Cylinder { r: 5, n: 4 }));
        let lab = built.labeling.unwrap();
        assert_eq!((lab.left_size(), lab.right_size()), (5, 4));
        assert_eq!(built.graph.edge_count(), 5 * 4 + 4 * 4);
    }
}
