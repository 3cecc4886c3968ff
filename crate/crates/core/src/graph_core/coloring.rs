use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

use super::graph::{pair_count, Graph};
use super::GraphError;

/// Tolerance for balance comparisons when the fraction is not rational.
pub const REAL_EPS_TOLERANCE: f64 = 1e-12;

/// A balance fraction `ε ∈ (0, 1/2]`.
///
/// Rational values are compared exactly by integer cross-multiplication.
/// The threshold of the dense-graph formulation is `k = 1/ε`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Epsilon {
    Rational { num: u64, den: u64 },
    Real(f64),
}

impl Epsilon {
    pub fn rational(num: u64, den: u64) -> Result<Self, GraphError> {
        if den == 0 {
            return Err(GraphError::InvalidInput("epsilon denominator is zero".into()));
        }
        let g = num.gcd(&den).max(1);
        let e = Epsilon::Rational { num: num / g, den: den / g };
        e.validate()?;
        Ok(e)
    }

    pub fn real(value: f64) -> Result<Self, GraphError> {
        let e = Epsilon::Real(value);
        e.validate()?;
        Ok(e)
    }

    pub fn validate(&self) -> Result<(), GraphError> {
        let ok = match *self {
            Epsilon::Rational { num, den } => {
                den != 0 && num > 0 && (num as u128) * 2 <= den as u128
            }
            Epsilon::Real(x) => x.is_finite() && x > 0.0 && x <= 0.5,
        };
        if ok {
            Ok(())
        } else {
            Err(GraphError::InvalidInput(format!("epsilon {self} not in (0, 1/2]")))
        }
    }

    pub fn value(&self) -> f64 {
        match *self {
            Epsilon::Rational { num, den } => num as f64 / den as f64,
            Epsilon::Real(x) => x,
        }
    }

    /// The corresponding density parameter `k = 1/ε`.
    pub fn as_k(&self) -> f64 {
        match *self {
            Epsilon::Rational { num, den } => den as f64 / num as f64,
            Epsilon::Real(x) => 1.0 / x,
        }
    }

    /// `count ≥ ε · total`, exact for rational ε.
    pub fn at_most_fraction(&self, count: usize, total: usize) -> bool {
        match *self {
            Epsilon::Rational { num, den } => {
                count as u128 * den as u128 >= num as u128 * total as u128
            }
            Epsilon::Real(x) => {
                if total == 0 {
                    return true;
                }
                count as f64 / total as f64 >= x - REAL_EPS_TOLERANCE
            }
        }
    }

    /// `⌈ε · total⌉`, exact for rational ε.
    pub fn ceil_fraction_of(&self, total: usize) -> usize {
        match *self {
            Epsilon::Rational { num, den } => {
                (num as u128 * total as u128).div_ceil(den as u128) as usize
            }
            Epsilon::Real(x) => (x * total as f64).ceil() as usize,
        }
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Epsilon::Rational { num, den } => write!(f, "{num}/{den}"),
            Epsilon::Real(x) => write!(f, "{x}"),
        }
    }
}

/// Parses `p/q`, a plain decimal such as `0.15` (kept exact), or any other
/// float literal (kept as a real).
impl FromStr for Epsilon {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, GraphError> {
        let s = s.trim();
        let bad = || GraphError::InvalidInput(format!("cannot parse epsilon {s:?}"));
        if let Some((p, q)) = s.split_once('/') {
            let num = p.trim().parse::<u64>().map_err(|_| bad())?;
            let den = q.trim().parse::<u64>().map_err(|_| bad())?;
            return Epsilon::rational(num, den);
        }
        if let Some((int, frac)) = s.split_once('.') {
            let digits_ok = |t: &str| t.bytes().all(|b| b.is_ascii_digit());
            if digits_ok(int) && digits_ok(frac) && int.len() + frac.len() <= 18 && !frac.is_empty() {
                let den = 10u64.pow(frac.len() as u32);
                let num = format!("{int}{frac}").parse::<u64>().map_err(|_| bad())?;
                return Epsilon::rational(num, den);
            }
        }
        let x = s.parse::<f64>().map_err(|_| bad())?;
        Epsilon::real(x)
    }
}

/// A red/blue coloring of the edges of `K_n`, stored as the red graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoColoring {
    red: Graph,
}

impl TwoColoring {
    pub fn from_red_edges(n: usize, red: &[(usize, usize)]) -> Result<Self, GraphError> {
        Ok(TwoColoring { red: Graph::from_edges(n, red)? })
    }

    pub fn from_red_graph(red: Graph) -> Self {
        TwoColoring { red }
    }

    pub fn n(&self) -> usize {
        self.red.n()
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn blue(&self) -> Graph {
        self.red.complement()
    }

    pub fn red_count(&self) -> usize {
        self.red.edge_count()
    }

    pub fn blue_count(&self) -> usize {
        self.red.non_edge_count()
    }

    /// The graph of the larger color class (red on ties) and the fraction of
    /// `K_n` carried by the other class.
    pub fn majority_graph(&self) -> Result<(Graph, f64), GraphError> {
        let n = self.n();
        if n < 2 {
            return Err(GraphError::InvalidInput(format!(
                "majority graph needs n >= 2, got {n}"
            )));
        }
        let total = pair_count(n) as f64;
        let (red, blue) = (self.red_count(), self.blue_count());
        if red >= blue {
            Ok((self.red.clone(), blue as f64 / total))
        } else {
            Ok((self.blue(), red as f64 / total))
        }
    }

    /// True iff each color covers at least an `eps` fraction of `K_n`.
    pub fn is_eps_balanced(&self, eps: Epsilon) -> Result<bool, GraphError> {
        eps.validate()?;
        let total = pair_count(self.n());
        Ok(eps.at_most_fraction(self.red_count(), total)
            && eps.at_most_fraction(self.blue_count(), total))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_five_red() -> TwoColoring {
        TwoColoring::from_red_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn majority_examples() {
        let (g, frac) = k4_five_red().majority_graph().unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!((frac - 1.0 / 6.0).abs() < 1e-15);

        let all_red = TwoColoring::from_red_graph(Graph::complete(3));
        let (g, frac) = all_red.majority_graph().unwrap();
        assert_eq!(g, Graph::complete(3));
        assert_eq!(frac, 0.0);

        let tie = TwoColoring::from_red_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let (g, frac) = tie.majority_graph().unwrap();
        assert_eq!(g, *tie.red());
        assert_eq!(frac, 0.5);

        let blue_major = TwoColoring::from_red_edges(4, &[(0, 1)]).unwrap();
        let (g, _) = blue_major.majority_graph().unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(!g.has_edge(0, 1));

        assert!(TwoColoring::from_red_graph(Graph::empty(1)).majority_graph().is_err());
    }

    #[test]
    fn balance_examples() {
        let c = k4_five_red();
        assert!(!c.is_eps_balanced(Epsilon::rational(1, 5).unwrap()).unwrap());
        assert!(c.is_eps_balanced(Epsilon::rational(1, 6).unwrap()).unwrap());
        assert!(c.is_eps_balanced(Epsilon::real(1.0 / 6.0).unwrap()).unwrap());
        let all_red = TwoColoring::from_red_graph(Graph::complete(3));
        assert!(!all_red.is_eps_balanced("0.01".parse().unwrap()).unwrap());
    }

    #[test]
    fn epsilon_range() {
        assert!(Epsilon::rational(0, 3).is_err());
        assert!(Epsilon::rational(2, 3).is_err());
        assert!(Epsilon::rational(1, 2).is_ok());
        assert!(Epsilon::real(0.5000001).is_err());
        assert!(Epsilon::real(f64::NAN).is_err());
        let bogus = Epsilon::Real(0.9);
        assert!(k4_five_red().is_eps_balanced(bogus).is_err());
    }

    #[test]
    fn epsilon_parsing() {
        assert_eq!("1/6".parse::<Epsilon>().unwrap(), Epsilon::Rational { num: 1, den: 6 });
        assert_eq!("0.2".parse::<Epsilon>().unwrap(), Epsilon::Rational { num: 1, den: 5 });
        assert_eq!("2/8".parse::<Epsilon>().unwrap(), Epsilon::Rational { num: 1, den: 4 });
        assert!(matches!("1e-3".parse::<Epsilon>().unwrap(), Epsilon::Real(_)));
        assert!("abc".parse::<Epsilon>().is_err());
        assert!("0.7".parse::<Epsilon>().is_err());
    }

    #[test]
    fn ceil_fraction() {
        let e = Epsilon::rational(1, 5).unwrap();
        assert_eq!(e.ceil_fraction_of(6), 2);
        assert_eq!(Epsilon::rational(1, 6).unwrap().ceil_fraction_of(6), 1);
    }
}
