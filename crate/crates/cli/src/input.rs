//! Loading complexes from files or family names.

use std::fs;
use std::path::Path;

use clap::ValueEnum;
use simpdim::io::{parse_edge_list, parse_generators_json, parse_graph6};
use simpdim::{Complex, Family, Graph};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// `{"generators": [[...], ...]}`, closed downward
    Json,
    /// one `u v` pair per line; the Whitney complex is used
    Edgelist,
    /// a single graph6 line; the Whitney complex is used
    Graph6,
}

impl Format {
    fn guess(path: &Path) -> Format {
        match path.extension().and_then(|e| e.to_str()) {
            Some("json") => Format::Json,
            Some("g6") | Some("graph6") => Format::Graph6,
            _ => Format::Edgelist,
        }
    }
}

/// A complex together with the graph it came from, when there is one.
#[derive(Clone, Debug)]
pub struct Loaded {
    pub complex: Complex,
    pub graph: Option<Graph>,
}

impl Loaded {
    /// The source graph, or the 1-skeleton of the complex.
    pub fn skeleton(&self) -> Graph {
        match &self.graph {
            Some(g) => g.clone(),
            None => Graph::from_skeleton(&self.complex),
        }
    }
}

/// Reads `arg` as a file when it exists, otherwise as a family name such
/// as `K4`, `C6`, `K3,3` or `icosahedron`.
pub fn load(arg: &str, format: Option<Format>) -> Result<Loaded> {
    let path = Path::new(arg);
    if !path.exists() {
        if let Ok(family) = arg.parse::<Family>() {
            return Ok(Loaded {
                complex: family.build()?,
                graph: None,
            });
        }
    }
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse(&text, format.unwrap_or_else(|| Format::guess(path))).map_err(|source| CliError::Input {
        path: arg.to_string(),
        source,
    })
}

/// Empty input yields the empty complex in every format.
pub fn parse(text: &str, format: Format) -> simpdim::Result<Loaded> {
    if text.trim().is_empty() {
        return Ok(Loaded {
            complex: Complex::empty(),
            graph: None,
        });
    }
    match format {
        Format::Json => Ok(Loaded {
            complex: parse_generators_json(text)?,
            graph: None,
        }),
        Format::Edgelist => {
            let g = parse_edge_list(text)?;
            Ok(Loaded {
                complex: g.whitney_complex(),
                graph: Some(g),
            })
        }
        Format::Graph6 => {
            let g = parse_graph6(text)?;
            Ok(Loaded {
                complex: g.whitney_complex(),
                graph: Some(g),
            })
        }
    }
}
