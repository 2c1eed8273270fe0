use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::{join, Complex};

/// Named complexes. Vertex labels start at 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// E_n: n isolated points.
    Points(usize),
    /// K_n: the full simplex on n vertices.
    Complete(usize),
    /// C_n: the cycle with n vertices and n edges, n ≥ 3.
    Cycle(usize),
    /// P_n: the path with n vertices and n − 1 edges.
    Path(usize),
    /// K_{m,n}: the complete bipartite graph.
    CompleteBipartite(usize, usize),
    /// S^d: the (d+1)-fold join of the two-point complex.
    CrossPolytope(usize),
    Octahedron,
    Icosahedron,
}

// 0 apex, 1..=5 upper ring, 6..=10 lower ring, 11 bottom
const ICOSAHEDRON: [[u32; 3]; 20] = [
    [0, 1, 2],
    [0, 2, 3],
    [0, 3, 4],
    [0, 4, 5],
    [0, 1, 5],
    [1, 2, 6],
    [2, 3, 7],
    [3, 4, 8],
    [4, 5, 9],
    [1, 5, 10],
    [2, 6, 7],
    [3, 7, 8],
    [4, 8, 9],
    [5, 9, 10],
    [1, 6, 10],
    [6, 7, 11],
    [7, 8, 11],
    [8, 9, 11],
    [9, 10, 11],
    [6, 10, 11],
];

impl Family {
    pub fn build(self) -> Result<Complex> {
        let positive = |n: usize, what: &str| {
            if n == 0 {
                Err(Error::InvalidParameter(format!("{what} needs n >= 1")))
            } else {
                Ok(())
            }
        };
        match self {
            Family::Points(n) => {
                positive(n, "E_n")?;
                Complex::generate((0..n as u32).map(|v| vec![v]))
            }
            Family::Complete(n) => {
                positive(n, "K_n")?;
                Complex::generate([(0..n as u32).collect::<Vec<_>>()])
            }
            Family::Cycle(n) => {
                if n < 3 {
                    return Err(Error::InvalidParameter("C_n needs n >= 3".into()));
                }
                let n = n as u32;
                Complex::generate((0..n).map(|k| vec![k, (k + 1) % n]))
            }
            Family::Path(n) => {
                positive(n, "P_n")?;
                if n == 1 {
                    return Complex::generate([vec![0]]);
                }
                Complex::generate((0..n as u32 - 1).map(|k| vec![k, k + 1]))
            }
            Family::CompleteBipartite(m, n) => {
                positive(m, "K_{m,n}")?;
                positive(n, "K_{m,n}")?;
                Ok(join(
                    &Family::Points(m).build()?,
                    &Family::Points(n).build()?,
                ))
            }
            Family::CrossPolytope(d) => {
                let pair = Family::Points(2).build()?;
                Ok((0..d).fold(pair.clone(), |acc, _| join(&acc, &pair)))
            }
            Family::Octahedron => Family::CrossPolytope(2).build(),
            Family::Icosahedron => Complex::generate(ICOSAHEDRON.iter().map(|f| f.to_vec())),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Points(n) => write!(f, "E{n}"),
            Family::Complete(n) => write!(f, "K{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Path(n) => write!(f, "P{n}"),
            Family::CompleteBipartite(m, n) => write!(f, "K{m},{n}"),
            Family::CrossPolytope(d) => write!(f, "S{d}"),
            Family::Octahedron => write!(f, "octahedron"),
            Family::Icosahedron => write!(f, "icosahedron"),
        }
    }
}

/// Accepts the names produced by `Display`: `E4`, `K5`, `C6`, `P3`, `K3,3`,
/// `S2`, `octahedron`, `icosahedron`.
impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown family '{s}'"));
        let num = |t: &str| t.trim().parse::<usize>().map_err(|_| bad());
        let lower = s.trim().to_ascii_lowercase();
        match lower.as_str() {
            "octahedron" => return Ok(Family::Octahedron),
            "icosahedron" => return Ok(Family::Icosahedron),
            _ => {}
        }
        let (head, rest) = lower.split_at(lower.chars().next().map_or(0, char::len_utf8));
        match head {
            "e" => Ok(Family::Points(num(rest)?)),
            "c" => Ok(Family::Cycle(num(rest)?)),
            "p" => Ok(Family::Path(num(rest)?)),
            "s" => Ok(Family::CrossPolytope(num(rest)?)),
            "k" => match rest.split_once(',') {
                Some((m, n)) => Ok(Family::CompleteBipartite(num(m)?, num(n)?)),
                None => Ok(Family::Complete(num(rest)?)),
            },
            _ => Err(bad()),
        }
    }
}
