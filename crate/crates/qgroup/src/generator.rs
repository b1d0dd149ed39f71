use std::fmt;

use crate::QGroupError;

/// A single generator of `U_R(gl_n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum UGenerator {
    /// Divided power `e_i^{(l)}`.
    E { i: usize, l: u32 },
    /// Divided power `f_i^{(l)}`.
    F { i: usize, l: u32 },
    /// `K_i^{±1} = q^{±(h_i - h_{i+1})}`; `inverse` selects `K_i^{-1}`.
    K { i: usize, inverse: bool },
    /// `q^h` for `h = Σ a_j h_j`.
    QH(Vec<i64>),
}

impl UGenerator {
    pub fn validate(&self, n: u32) -> Result<(), QGroupError> {
        let bad = |msg: &str| QGroupError::InvalidGenerator { gen: self.to_string(), n, msg: msg.into() };
        match self {
            UGenerator::E { i, l } | UGenerator::F { i, l } => {
                if *i == 0 || *i >= n as usize {
                    return Err(bad("index must lie in 1..n-1"));
                }
                if *l == 0 {
                    return Err(bad("divided power must be at least 1"));
                }
            }
            UGenerator::K { i, .. } => {
                if *i == 0 || *i >= n as usize {
                    return Err(bad("index must lie in 1..n-1"));
                }
            }
            UGenerator::QH(h) => {
                if h.len() != n as usize {
                    return Err(bad("weight vector must have n entries"));
                }
            }
        }
        Ok(())
    }

    /// Weight vector of `K_i^p`, i.e. `p(ε_i - ε_{i+1})` read as `h`.
    pub fn k_weight(i: usize, p: i64, n: u32) -> Vec<i64> {
        let mut h = vec![0; n as usize];
        h[i - 1] = p;
        h[i] = -p;
        h
    }
}

impl fmt::Display for UGenerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UGenerator::E { i, l } => write!(f, "E({i},{l})"),
            UGenerator::F { i, l } => write!(f, "F({i},{l})"),
            UGenerator::K { i, inverse: false } => write!(f, "K({i})"),
            UGenerator::K { i, inverse: true } => write!(f, "K'({i})"),
            UGenerator::QH(h) => {
                let parts: Vec<String> = h.iter().map(|a| a.to_string()).collect();
                write!(f, "qh({})", parts.join(","))
            }
        }
    }
}

/// Parses `E(i,l)`, `F(i,l)`, `K(i)`, `K'(i)` or `qh(a1,...,an)`;
/// `E(i)` and `F(i)` mean `l = 1`.
pub fn parse_generator(s: &str) -> Result<UGenerator, QGroupError> {
    let bad = || QGroupError::Parse(s.to_string());
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let open = t.find('(').ok_or_else(bad)?;
    if !t.ends_with(')') {
        return Err(bad());
    }
    let name = &t[..open];
    let args: Vec<i64> = t[open + 1..t.len() - 1]
        .split(',')
        .map(|a| a.parse::<i64>().map_err(|_| bad()))
        .collect::<Result<_, _>>()?;
    let index = |k: usize| -> Result<usize, QGroupError> {
        args.get(k).copied().filter(|&v| v > 0).map(|v| v as usize).ok_or_else(bad)
    };
    let power = || -> Result<u32, QGroupError> {
        match args.len() {
            1 => Ok(1),
            2 if args[1] > 0 => Ok(args[1] as u32),
            _ => Err(bad()),
        }
    };
    match name {
        "E" => Ok(UGenerator::E { i: index(0)?, l: power()? }),
        "F" => Ok(UGenerator::F { i: index(0)?, l: power()? }),
        "K" if args.len() == 1 => Ok(UGenerator::K { i: index(0)?, inverse: false }),
        "K'" if args.len() == 1 => Ok(UGenerator::K { i: index(0)?, inverse: true }),
        "qh" => Ok(UGenerator::QH(args)),
        _ => Err(bad()),
    }
}
