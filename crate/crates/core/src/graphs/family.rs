//! Named graph families and the `name:key=value,...` descriptor syntax.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError, Limits};

/// A parameterized graph family member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Hamming { d: usize, q: usize },
    Johnson { n: usize, k: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Multipartite { parts: Vec<usize> },
    Petersen,
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

impl Family {
    /// Vertex count without building the graph (saturating on overflow).
    pub fn vertex_count(&self) -> u128 {
        match self {
            Family::Hamming { d, q } => (*q as u128).checked_pow(*d as u32).unwrap_or(u128::MAX),
            Family::Johnson { n, k } if *k <= *n => binomial(*n, *k),
            Family::Johnson { .. } => 0,
            Family::Cycle { n } | Family::Complete { n } => *n as u128,
            Family::Multipartite { parts } => parts.iter().map(|&p| p as u128).sum(),
            Family::Petersen => 10,
        }
    }

    pub fn build(&self) -> Result<Graph, GraphError> {
        self.build_with(&Limits::default())
    }

    pub fn build_with(&self, limits: &Limits) -> Result<Graph, GraphError> {
        self.validate()?;
        limits.check_vertices(self.vertex_count())?;
        let g = match self {
            Family::Hamming { d, q } => build_hamming(*d, *q),
            Family::Johnson { n, k } => build_johnson(*n, *k),
            Family::Cycle { n } => {
                let edges: Vec<_> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(*n, &edges)
            }
            Family::Complete { n } => {
                let edges: Vec<_> = (0..*n)
                    .flat_map(|i| (i + 1..*n).map(move |j| (i, j)))
                    .collect();
                Graph::from_edges(*n, &edges)
            }
            Family::Multipartite { parts } => build_multipartite(parts),
            Family::Petersen => build_petersen(),
        }?;
        limits.check(&g)?;
        Ok(g)
    }

    fn validate(&self) -> Result<(), GraphError> {
        let bad = |msg: String| Err(GraphError::InvalidParams(msg));
        match self {
            Family::Hamming { d, q } if *d < 1 || *q < 2 => bad(format!("hamming needs d >= 1 and q >= 2, got d={d}, q={q}")),
            Family::Johnson { n, k } if *k < 1 || *k >= *n => bad(format!("johnson needs 1 <= k <= n-1, got n={n}, k={k}")),
            Family::Johnson { n, .. } if *n > 64 => bad(format!("johnson supports n <= 64, got {n}")),
            Family::Cycle { n } if *n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            Family::Complete { n } if *n < 2 => bad(format!("complete graph needs n >= 2, got {n}")),
            Family::Multipartite { parts } if parts.len() < 2 || parts.contains(&0) => {
                bad(format!("multipartite needs at least two positive parts, got {parts:?}"))
            }
            _ => Ok(()),
        }
    }
}

fn build_hamming(d: usize, q: usize) -> Result<Graph, GraphError> {
    let n = q.pow(d as u32);
    let mut edges = Vec::with_capacity(n * d * (q - 1) / 2);
    for v in 0..n {
        let mut place = 1;
        for _ in 0..d {
            let digit = (v / place) % q;
            for other in digit + 1..q {
                edges.push((v, v + (other - digit) * place));
            }
            place *= q;
        }
    }
    Graph::from_edges(n, &edges)
}

/// k-subsets of `0..n` as bitmasks in lexicographic order of their sorted elements.
fn subsets(n: usize, k: usize) -> Vec<u64> {
    fn rec(start: usize, n: usize, k: usize, cur: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(cur);
            return;
        }
        for i in start..=n - k {
            rec(i + 1, n, k - 1, cur | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut out);
    out
}

fn build_johnson(n: usize, k: usize) -> Result<Graph, GraphError> {
    let verts = subsets(n, k);
    let index: HashMap<u64, usize> = verts.iter().enumerate().map(|(i, &s)| (s, i)).collect();
    let mut edges = Vec::new();
    for (i, &s) in verts.iter().enumerate() {
        for out in (0..n).filter(|b| s & (1 << b) != 0) {
            for inn in (0..n).filter(|b| s & (1 << b) == 0) {
                let j = index[&(s & !(1 << out) | (1 << inn))];
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    Graph::from_edges(verts.len(), &edges)
}

fn build_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    let mut label = Vec::new();
    for (p, &size) in parts.iter().enumerate() {
        label.extend(std::iter::repeat_n(p, size));
    }
    let n = label.len();
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| label[i] != label[j])
        .collect();
    Graph::from_edges(n, &edges)
}

/// Kneser graph on the 2-subsets of a 5-set.
fn build_petersen() -> Result<Graph, GraphError> {
    let verts = subsets(5, 2);
    let edges: Vec<_> = (0..verts.len())
        .flat_map(|i| (i + 1..verts.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| verts[i] & verts[j] == 0)
        .collect();
    Graph::from_edges(verts.len(), &edges)
}

pub fn hamming(d: usize, q: usize) -> Result<Graph, GraphError> {
    Family::Hamming { d, q }.build()
}

pub fn johnson(n: usize, k: usize) -> Result<Graph, GraphError> {
    Family::Johnson { n, k }.build()
}

pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    Family::Cycle { n }.build()
}

pub fn complete(n: usize) -> Result<Graph, GraphError> {
    Family::Complete { n }.build()
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GraphError> {
    Family::Multipartite { parts: parts.to_vec() }.build()
}

pub fn petersen() -> Result<Graph, GraphError> {
    Family::Petersen.build()
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Hamming { d, q } => write!(f, "hamming:d={d},q={q}"),
            Family::Johnson { n, k } => write!(f, "johnson:n={n},k={k}"),
            Family::Cycle { n } => write!(f, "cycle:n={n}"),
            Family::Complete { n } => write!(f, "complete:n={n}"),
            Family::Multipartite { parts } => {
                let p: Vec<String> = parts.iter().map(usize::to_string).collect();
                write!(f, "multipartite:parts={}", p.join("+"))
            }
            Family::Petersen => write!(f, "petersen"),
        }
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |m: String| GraphError::InvalidParams(m);
        let (name, rest) = s.trim().split_once(':').unwrap_or((s.trim(), ""));
        let mut kv = HashMap::new();
        for item in rest.split(',').filter(|t| !t.trim().is_empty()) {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| err(format!("expected key=value, got `{item}`")))?;
            kv.insert(k.trim().to_string(), v.trim().to_string());
        }
        let mut take = |key: &str| -> Result<String, GraphError> {
            kv.remove(key).ok_or_else(|| err(format!("`{name}` requires `{key}=`")))
        };
        let num = |v: String, key: &str| -> Result<usize, GraphError> {
            v.parse().map_err(|_| err(format!("`{key}` must be a nonnegative integer, got `{v}`")))
        };
        let fam = match name {
            "hamming" => Family::Hamming { d: num(take("d")?, "d")?, q: num(take("q")?, "q")? },
            "johnson" => Family::Johnson { n: num(take("n")?, "n")?, k: num(take("k")?, "k")? },
            "cycle" => Family::Cycle { n: num(take("n")?, "n")? },
            "complete" => Family::Complete { n: num(take("n")?, "n")? },
            "multipartite" => {
                let parts = take("parts")?
                    .split('+')
                    .map(|p| num(p.trim().to_string(), "parts"))
                    .collect::<Result<Vec<_>, _>>()?;
                Family::Multipartite { parts }
            }
            "petersen" => Family::Petersen,
            other => return Err(err(format!("unknown family `{other}`"))),
        };
        if let Some(k) = kv.keys().next() {
            return Err(err(format!("unexpected key `{k}` for `{name}`")));
        }
        fam.validate()?;
        Ok(fam)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::diameter;

    #[test]
    fn parses_descriptors() {
        assert_eq!("hamming:d=3,q=3".parse::<Family>().unwrap(), Family::Hamming { d: 3, q: 3 });
        assert_eq!(
            "multipartite:parts=2+2+2".parse::<Family>().unwrap(),
            Family::Multipartite { parts: vec![2, 2, 2] }
        );
        for s in ["johnson:n=4,k=2", "cycle:n=5", "complete:n=3", "petersen"] {
            assert_eq!(s.parse::<Family>().unwrap().to_string(), s);
        }
        assert!("hamming:d=3".parse::<Family>().is_err());
        assert!("cycle:n=5,x=1".parse::<Family>().is_err());
        assert!("johnson:n=3,k=3".parse::<Family>().is_err());
        assert!("torus:n=3".parse::<Family>().is_err());
    }

    #[test]
    fn small_members() {
        let k3 = complete(3).unwrap();
        assert_eq!(hamming(1, 3).unwrap(), k3);
        assert_eq!(complete_multipartite(&[1, 1, 1]).unwrap(), k3);
        assert_eq!(johnson(3, 1).unwrap(), k3);
        assert_eq!(johnson(2, 1).unwrap(), complete(2).unwrap());
        // H(2,2) and K_{2,2} are both C4 up to relabeling
        let h22 = hamming(2, 2).unwrap();
        assert_eq!((h22.vertex_count(), h22.regular_degree(), diameter(&h22)), (4, Some(2), 2));
        let h23 = hamming(2, 3).unwrap();
        assert_eq!((h23.vertex_count(), h23.regular_degree(), diameter(&h23)), (9, Some(4), 2));
        let j42 = johnson(4, 2).unwrap();
        assert_eq!((j42.vertex_count(), j42.regular_degree(), diameter(&j42)), (6, Some(4), 2));
        let p = petersen().unwrap();
        assert_eq!((p.vertex_count(), p.regular_degree(), diameter(&p)), (10, Some(3), 2));
    }

    #[test]
    fn size_cap() {
        let limits = Limits { max_vertices: 100, max_arcs: 65536 };
        assert!(matches!(
            Family::Hamming { d: 3, q: 5 }.build_with(&limits),
            Err(GraphError::SizeLimit { value: 125, .. })
        ));
        assert!(matches!(
            Family::Hamming { d: 60, q: 12 }.build(),
            Err(GraphError::SizeLimit { .. })
        ));
    }
}
