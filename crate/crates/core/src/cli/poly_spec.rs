use std::path::PathBuf;

use crate::dunkl::DunklContext;
use crate::error::{Error, Result};
use crate::polyalg::MultiPoly;
use crate::waves::{degree_cap, vertex_pair, InvariantFamilies, QFamily, DEGREE_CAP_ENV};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Q,
    W,
    Phi,
}

/// How a polynomial is named on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolySpec {
    /// One member of a vertex family; `vertex` indexes I₊, `None` is `(0,τ,1)`.
    Vertex { family: Family, n: usize, vertex: Option<usize> },
    /// The sum over I₊.
    Invariant { family: Family, n: usize },
    File(PathBuf),
    Expr(String),
}

impl PolySpec {
    pub fn parse(s: &str) -> Result<PolySpec> {
        let s = s.trim();
        if let Some(path) = s.strip_prefix('@') {
            return Ok(PolySpec::File(path.into()));
        }
        let parts: Vec<&str> = s.split(':').collect();
        let family = match parts[0] {
            "q" | "qg" => Some(Family::Q),
            "w" | "wg" => Some(Family::W),
            "phi" | "phig" => Some(Family::Phi),
            _ => None,
        };
        let Some(family) = family.filter(|_| parts.len() > 1) else {
            return Ok(PolySpec::Expr(s.to_string()));
        };
        let num = |t: &str| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad number `{}` in `{}`", t, s)));
        let n = num(parts[1])?;
        if parts[0].ends_with('g') {
            if parts.len() != 2 {
                return Err(Error::Parse(format!("invariant families take no vertex: `{}`", s)));
            }
            return Ok(PolySpec::Invariant { family, n });
        }
        match parts.len() {
            2 => Ok(PolySpec::Vertex { family, n, vertex: None }),
            3 => Ok(PolySpec::Vertex { family, n, vertex: Some(num(parts[2])?) }),
            _ => Err(Error::Parse(format!("expected family:n[:vertex], got `{}`", s))),
        }
    }
}

fn check_cap(n: usize) -> Result<()> {
    let cap = degree_cap();
    if n > cap {
        return Err(Error::InvalidArgument(format!("degree {} exceeds the cap {} (set {} to raise it)", n, cap, DEGREE_CAP_ENV)));
    }
    Ok(())
}

/// Build the polynomial a spec names, in the variables x1..x3.
pub fn resolve_poly(ctx: &DunklContext, spec: &PolySpec) -> Result<MultiPoly> {
    let i_plus = &ctx.group().vertices.i_plus;
    let p = match spec {
        PolySpec::Vertex { family, n, vertex } => {
            check_cap(*n)?;
            let y = match vertex {
                Some(i) => i_plus
                    .get(*i)
                    .cloned()
                    .ok_or_else(|| Error::InvalidArgument(format!("vertex index must be < {}", i_plus.len())))?,
                None => vertex_pair().0,
            };
            let f = QFamily::new(i_plus, y, *n);
            match family {
                Family::Q => f.q(*n)?,
                Family::W => f.w(*n)?,
                Family::Phi => f.phi(*n)?,
            }
        }
        PolySpec::Invariant { family, n } => {
            check_cap(*n)?;
            let f = InvariantFamilies::new(i_plus, *n);
            match family {
                Family::Q => f.q(*n)?,
                Family::W => f.w(*n)?,
                Family::Phi => f.phi(*n)?,
            }
        }
        PolySpec::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {}", path.display(), e)))?;
            MultiPoly::parse(text.trim())?
        }
        PolySpec::Expr(s) => MultiPoly::parse(s)?,
    };
    if p.arity() != 3 {
        return Err(Error::InvalidArgument("expected a polynomial in x1, x2, x3 only".into()));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs() {
        assert_eq!(PolySpec::parse("phi:6").unwrap(), PolySpec::Vertex { family: Family::Phi, n: 6, vertex: None });
        assert_eq!(PolySpec::parse("q:3:2").unwrap(), PolySpec::Vertex { family: Family::Q, n: 3, vertex: Some(2) });
        assert_eq!(PolySpec::parse("phig:10").unwrap(), PolySpec::Invariant { family: Family::Phi, n: 10 });
        assert_eq!(PolySpec::parse("@a.txt").unwrap(), PolySpec::File("a.txt".into()));
        assert_eq!(PolySpec::parse("x1^2 + w").unwrap(), PolySpec::Expr("x1^2 + w".into()));
        assert!(PolySpec::parse("phig:6:1").is_err());
        assert!(PolySpec::parse("q:x").is_err());
    }
}
