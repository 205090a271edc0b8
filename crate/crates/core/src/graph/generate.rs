//! Deterministic graph families.
//!
//! Labelings (all 0-based):
//! - `path:n`: `0-1-..-(n-1)`; `cycle:n` adds `(n-1)-0`.
//! - `complete_multipartite:d:t`: part `i` is `i*t .. i*t+t-1`.
//! - `star:k`: centre `0`, leaves `1..=k`.
//! - `broom:p:r`: path `0..p-1`, leaves `p..p+r-1` attached to `p-1`.
//! - `double_broom:p:r:s`: path `0..p-1`, `r` leaves on `p-1` then `s`
//!   leaves on `0`.
//! - `mycielski:<base>`: base vertices `0..n-1`, shadows `n..2n-1` (shadow
//!   of `v` is joined to the neighbours of `v`), apex `2n` joined to all
//!   shadows.
//! - `kneser:n:k`: `k`-subsets of `0..n` in lexicographic order, adjacent
//!   when disjoint. `petersen` is `kneser:5:2`.
//! - `gnp:n:prob:seed`: pairs `(i, j)`, `i < j`, visited with `i` outer and
//!   `j` inner, both ascending. Each pair draws one SplitMix64 output `x`
//!   from a generator whose state starts at `seed`; the edge is present iff
//!   `(x >> 11) * 2^-53 < prob`.

use std::fmt;
use std::str::FromStr;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Empty(usize),
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteMultipartite { d: usize, t: usize },
    Star(usize),
    Broom { p: usize, r: usize },
    DoubleBroom { p: usize, r: usize, s: usize },
    Mycielski(Box<GeneratorSpec>),
    Kneser { n: usize, k: usize },
    Gnp { n: usize, prob: f64, seed: u64 },
}

fn capacity(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        Err(Error::Capacity { requested: n })
    } else {
        Ok(())
    }
}

fn positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        Err(Error::invalid(format!("{name} must be positive")))
    } else {
        Ok(())
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

pub fn generate(spec: &GeneratorSpec) -> Result<Graph> {
    use GeneratorSpec::*;
    match *spec {
        Empty(n) => Graph::empty(n),
        Path(n) => {
            positive("path length", n)?;
            capacity(n)?;
            let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            Graph::from_edges(n, &edges)
        }
        Cycle(n) => {
            if n < 3 {
                return Err(Error::invalid("cycle needs at least 3 vertices"));
            }
            capacity(n)?;
            let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            edges.push((n - 1, 0));
            Graph::from_edges(n, &edges)
        }
        Complete(n) => {
            positive("clique size", n)?;
            capacity(n)?;
            let mut g = Graph::empty(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    g.add_edge(u, v);
                }
            }
            Ok(g)
        }
        CompleteMultipartite { d, t } => {
            positive("d", d)?;
            positive("t", t)?;
            let n = d.checked_mul(t).ok_or(Error::Capacity { requested: usize::MAX })?;
            capacity(n)?;
            let mut g = Graph::empty(n)?;
            for u in 0..n {
                for v in u + 1..n {
                    if u / t != v / t {
                        g.add_edge(u, v);
                    }
                }
            }
            Ok(g)
        }
        Star(k) => {
            positive("star size", k)?;
            capacity(k + 1)?;
            let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
            Graph::from_edges(k + 1, &edges)
        }
        Broom { p, r } => {
            positive("r", r)?;
            generate(&DoubleBroom { p, r, s: 0 })
        }
        DoubleBroom { p, r, s } => {
            positive("p", p)?;
            let n = p + r + s;
            capacity(n)?;
            let mut edges: Vec<_> = (1..p).map(|v| (v - 1, v)).collect();
            edges.extend((p..p + r).map(|v| (p - 1, v)));
            edges.extend((p + r..n).map(|v| (0, v)));
            Graph::from_edges(n, &edges)
        }
        Mycielski(ref base) => {
            let base = generate(base)?;
            mycielskian(&base)
        }
        Kneser { n, k } => {
            positive("k", k)?;
            if n < k {
                return Err(Error::invalid("kneser needs n >= k"));
            }
            let count = binomial(n, k);
            capacity(count)?;
            let ground = super::VertexSet::full(n);
            let mut sets: Vec<u64> = ground.subsets_of_size(k).map(|s| s.bits()).collect();
            // lexicographic order on sorted element lists
            sets.sort_by_key(|&s| super::VertexSet::from_bits(s).to_vec());
            let mut g = Graph::empty(count)?;
            for i in 0..count {
                for j in i + 1..count {
                    if sets[i] & sets[j] == 0 {
                        g.add_edge(i, j);
                    }
                }
            }
            Ok(g)
        }
        Gnp { n, prob, seed } => {
            capacity(n)?;
            if !(0.0..=1.0).contains(&prob) {
                return Err(Error::invalid("gnp probability must lie in [0, 1]"));
            }
            let mut rng = SplitMix64::seed_from_u64(seed);
            let mut g = Graph::empty(n)?;
            for i in 0..n {
                for j in i + 1..n {
                    let x = rng.next_u64();
                    let u = (x >> 11) as f64 * (1.0 / (1u64 << 53) as f64);
                    if u < prob {
                        g.add_edge(i, j);
                    }
                }
            }
            Ok(g)
        }
    }
}

pub fn mycielskian(base: &Graph) -> Result<Graph> {
    let n = base.n();
    let total = 2 * n + 1;
    capacity(total)?;
    let mut g = Graph::empty(total)?;
    for (u, v) in base.edges() {
        g.add_edge(u, v);
        g.add_edge(u, v + n);
        g.add_edge(u + n, v);
    }
    for v in n..2 * n {
        g.add_edge(v, 2 * n);
    }
    Ok(g)
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GeneratorSpec::*;
        match self {
            Empty(n) => write!(f, "empty:{n}"),
            Path(n) => write!(f, "path:{n}"),
            Cycle(n) => write!(f, "cycle:{n}"),
            Complete(n) => write!(f, "complete:{n}"),
            CompleteMultipartite { d, t } => write!(f, "complete_multipartite:{d}:{t}"),
            Star(k) => write!(f, "star:{k}"),
            Broom { p, r } => write!(f, "broom:{p}:{r}"),
            DoubleBroom { p, r, s } => write!(f, "double_broom:{p}:{r}:{s}"),
            Mycielski(base) => write!(f, "mycielski:{base}"),
            Kneser { n, k } => write!(f, "kneser:{n}:{k}"),
            Gnp { n, prob, seed } => write!(f, "gnp:{n}:{prob}:{seed}"),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let tokens: Vec<&str> = s.trim().split(':').collect();
        let (spec, used) = parse_tokens(&tokens, 0)?;
        if used != tokens.len() {
            return Err(Error::invalid(format!("trailing tokens in generator spec {s:?}")));
        }
        Ok(spec)
    }
}

fn parse_tokens(tokens: &[&str], at: usize) -> Result<(GeneratorSpec, usize)> {
    use GeneratorSpec::*;
    let name = *tokens
        .get(at)
        .ok_or_else(|| Error::invalid("missing generator family"))?;
    let int = |i: usize| -> Result<usize> {
        let tok = tokens
            .get(at + i)
            .ok_or_else(|| Error::invalid(format!("{name}: missing parameter {i}")))?;
        tok.parse()
            .map_err(|_| Error::invalid(format!("{name}: bad integer {tok:?}")))
    };
    Ok(match name {
        "empty" => (Empty(int(1)?), at + 2),
        "path" => (Path(int(1)?), at + 2),
        "cycle" => (Cycle(int(1)?), at + 2),
        "complete" => (Complete(int(1)?), at + 2),
        "complete_multipartite" | "kdt" => (
            CompleteMultipartite {
                d: int(1)?,
                t: int(2)?,
            },
            at + 3,
        ),
        "star" => (Star(int(1)?), at + 2),
        "broom" => (Broom { p: int(1)?, r: int(2)? }, at + 3),
        "double_broom" => (
            DoubleBroom {
                p: int(1)?,
                r: int(2)?,
                s: int(3)?,
            },
            at + 4,
        ),
        "kneser" => (Kneser { n: int(1)?, k: int(2)? }, at + 3),
        "petersen" => (Kneser { n: 5, k: 2 }, at + 1),
        "mycielski" => {
            let (base, used) = parse_tokens(tokens, at + 1)?;
            (Mycielski(Box::new(base)), used)
        }
        "gnp" => {
            let prob_tok = tokens
                .get(at + 2)
                .ok_or_else(|| Error::invalid("gnp: missing probability"))?;
            let prob: f64 = prob_tok
                .parse()
                .map_err(|_| Error::invalid(format!("gnp: bad probability {prob_tok:?}")))?;
            let seed_tok = tokens
                .get(at + 3)
                .ok_or_else(|| Error::invalid("gnp: a seed is required"))?;
            let seed: u64 = seed_tok
                .parse()
                .map_err(|_| Error::invalid(format!("gnp: bad seed {seed_tok:?}")))?;
            (
                Gnp {
                    n: int(1)?,
                    prob,
                    seed,
                },
                at + 4,
            )
        }
        other => return Err(Error::invalid(format!("unknown generator family {other:?}"))),
    })
}
