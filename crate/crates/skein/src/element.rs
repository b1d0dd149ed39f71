use std::collections::BTreeMap;
use std::fmt;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};
use thiserror::Error;
use wt_laurent::LaurentPoly;
use wt_tangle::{Connector, TangleType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ElementError {
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("parameter mismatch: n = {0} and n = {1}")]
    NMismatch(u32, u32),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// A `Z[q,q^-1]`-combination of connectors of one type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangleElement {
    ty: TangleType,
    n: u32,
    terms: BTreeMap<Connector, LaurentPoly>,
}

impl TangleElement {
    pub fn zero(ty: TangleType, n: u32) -> Self {
        Self { ty, n, terms: BTreeMap::new() }
    }

    pub fn basis(c: Connector, n: u32) -> Self {
        Self::from_terms(c.ty().clone(), n, [(c, LaurentPoly::one())])
    }

    pub fn identity(ty: TangleType, n: u32) -> Result<Self, ElementError> {
        let c = Connector::identity(ty).map_err(|e| ElementError::TypeMismatch(e.to_string()))?;
        Ok(Self::basis(c, n))
    }

    pub fn from_terms(ty: TangleType, n: u32, terms: impl IntoIterator<Item = (Connector, LaurentPoly)>) -> Self {
        let mut e = Self::zero(ty, n);
        for (c, p) in terms {
            e.add_term(c, &p);
        }
        e
    }

    pub fn ty(&self) -> &TangleType {
        &self.ty
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Connector, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, c: &Connector) -> LaurentPoly {
        self.terms.get(c).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, c: Connector, p: &LaurentPoly) {
        debug_assert_eq!(c.ty(), &self.ty);
        if p.is_zero() {
            return;
        }
        let slot = self.terms.entry(c).or_default();
        *slot += p;
        if slot.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    fn check(&self, other: &Self) -> Result<(), ElementError> {
        if self.n != other.n {
            return Err(ElementError::NMismatch(self.n, other.n));
        }
        if self.ty != other.ty {
            return Err(ElementError::TypeMismatch(format!("{} vs {}", self.ty, other.ty)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, ElementError> {
        self.check(other)?;
        let mut out = self.clone();
        for (c, p) in &other.terms {
            out.add_term(c.clone(), p);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ElementError> {
        self.add(&other.scale(&LaurentPoly::constant(-1)))
    }

    pub fn scale(&self, p: &LaurentPoly) -> Self {
        let terms = self.terms.iter().map(|(c, v)| (c.clone(), v * p));
        Self::from_terms(self.ty.clone(), self.n, terms)
    }

    /// Coefficients at `q = 1`.
    pub fn at_one(&self) -> BTreeMap<Connector, num_bigint::BigInt> {
        self.terms
            .iter()
            .map(|(c, p)| (c.clone(), p.at_one()))
            .filter(|(_, v)| *v != num_bigint::BigInt::from(0))
            .collect()
    }
}

impl fmt::Display for TangleElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (c, p)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({p})·{c}")?;
        }
        Ok(())
    }
}

struct EdgeList<'a>(&'a Connector);

impl Serialize for EdgeList<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let edges: Vec<[String; 2]> = self.0.edges().iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect();
        edges.serialize(s)
    }
}

struct Term<'a>(&'a Connector, &'a LaurentPoly);

impl Serialize for Term<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("connector", &EdgeList(self.0))?;
        m.serialize_entry("coeff", self.1)?;
        m.end()
    }
}

/// `{ "type": "v^ | v^", "n": 2, "terms": [ { "connector": [["T1","B1"], ...], "coeff": {...} } ] }`
impl Serialize for TangleElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TangleElement", 3)?;
        st.serialize_field("type", &self.ty.to_string())?;
        st.serialize_field("n", &self.n)?;
        let terms: Vec<Term> = self.terms.iter().map(|(c, p)| Term(c, p)).collect();
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}
