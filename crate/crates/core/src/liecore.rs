//! Graded basis symbols, sparse algebra elements, finite-dimensional Lie
//! algebras given by structure constants, and the almost-grading scan.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactnum::{ParamPolynomial, Rational};
use crate::families::LieFamily;

/// Which graded basis a symbol belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GeneratorKind {
    /// `V_n` of the vector field algebra (`l_n` at the Witt specialization).
    VectorField,
    /// `A_n` of the function algebra.
    Function,
    /// `x ⊗ A_n` with `x` a basis element of a finite-dimensional algebra.
    Current,
    /// The central element `t` of an extension.
    Central,
}

/// One graded basis symbol.  `fd_index` is present exactly for
/// [`GeneratorKind::Current`]; the central element carries degree 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GeneratorId {
    kind: GeneratorKind,
    degree: i64,
    fd_index: Option<usize>,
}

impl GeneratorId {
    pub fn vector_field(degree: i64) -> Self {
        GeneratorId { kind: GeneratorKind::VectorField, degree, fd_index: None }
    }

    pub fn function(degree: i64) -> Self {
        GeneratorId { kind: GeneratorKind::Function, degree, fd_index: None }
    }

    pub fn current(fd_index: usize, degree: i64) -> Self {
        GeneratorId { kind: GeneratorKind::Current, degree, fd_index: Some(fd_index) }
    }

    pub fn central() -> Self {
        GeneratorId { kind: GeneratorKind::Central, degree: 0, fd_index: None }
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn fd_index(&self) -> Option<usize> {
        self.fd_index
    }

    /// Same symbol shifted in degree (identity on the central element).
    pub fn shifted(&self, by: i64) -> GeneratorId {
        match self.kind {
            GeneratorKind::Central => *self,
            _ => GeneratorId { degree: self.degree + by, ..*self },
        }
    }

    /// Render with basis names for the finite-dimensional part, e.g. `h*A_-1`.
    pub fn display_with(&self, fd_names: Option<&[String]>) -> String {
        match self.kind {
            GeneratorKind::VectorField => format!("V_{}", self.degree),
            GeneratorKind::Function => format!("A_{}", self.degree),
            GeneratorKind::Central => "t".to_string(),
            GeneratorKind::Current => {
                let i = self.fd_index.expect("current generator has fd index");
                let name = fd_names
                    .and_then(|ns| ns.get(i).cloned())
                    .unwrap_or_else(|| format!("g{}", i));
                format!("{}*A_{}", name, self.degree)
            }
        }
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(None))
    }
}

/// A finite linear combination of basis symbols with polynomial coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<GeneratorId, ParamPolynomial>,
}

impl Element {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn generator(g: GeneratorId) -> Self {
        let mut e = Element::zero();
        e.add_term(g, ParamPolynomial::one());
        e
    }

    pub fn term(g: GeneratorId, coeff: ParamPolynomial) -> Self {
        let mut e = Element::zero();
        e.add_term(g, coeff);
        e
    }

    pub fn add_term(&mut self, g: GeneratorId, coeff: ParamPolynomial) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(g) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = &*e.get() + &coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GeneratorId, &ParamPolynomial)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, g: &GeneratorId) -> ParamPolynomial {
        self.terms.get(g).cloned().unwrap_or_else(ParamPolynomial::zero)
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (g, c) in &other.terms {
            out.add_term(*g, -c);
        }
        out
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|(g, c)| (*g, -c)).collect(),
        }
    }

    pub fn scale(&self, c: &ParamPolynomial) -> Element {
        let mut out = Element::zero();
        for (g, v) in &self.terms {
            out.add_term(*g, v * c);
        }
        out
    }

    /// `self += c * other` without intermediate allocations per call site.
    pub fn add_scaled(&mut self, other: &Element, c: &ParamPolynomial) {
        for (g, v) in &other.terms {
            self.add_term(*g, v * c);
        }
    }

    /// Exact linear combination of elements.
    pub fn combine(parts: &[(ParamPolynomial, Element)]) -> Element {
        let mut out = Element::zero();
        for (c, e) in parts {
            for (g, v) in &e.terms {
                out.add_term(*g, v * c);
            }
        }
        out
    }

    /// Substitute parameters in every coefficient.
    pub fn substitute(&self, bindings: &BTreeMap<crate::exactnum::Param, ParamPolynomial>) -> Element {
        let mut out = Element::zero();
        for (g, v) in &self.terms {
            out.add_term(*g, v.substitute(bindings));
        }
        out
    }

    /// Render with basis names for current generators, e.g.
    /// `2*V_6 + (3*e1)*V_4 - V_2`.
    pub fn display_with(&self, fd_names: Option<&[String]>) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let gen = g.display_with(fd_names);
            let piece = match c.as_constant() {
                Some(r) if r.is_one() => gen,
                Some(r) if (-&r).is_one() => format!("-{}", gen),
                Some(r) => format!("({})*{}", r, gen),
                None => format!("({})*{}", c, gen),
            };
            if i > 0 {
                out.push_str(" + ");
            }
            out.push_str(&piece);
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(None))
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// An element of a finite-dimensional algebra in terms of basis indices.
pub type FdElement = BTreeMap<usize, Rational>;

/// A finite-dimensional Lie algebra presented by structure constants
/// `[T_a, T_b] = Σ_c C^c_{a,b} T_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLieAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    constants: BTreeMap<(usize, usize, usize), Rational>,
    killing: Vec<Vec<Rational>>,
}

#[derive(Deserialize)]
struct RawConstant {
    a: usize,
    b: usize,
    c: usize,
    value: Rational,
}

#[derive(Deserialize)]
struct RawAlgebra {
    dim: usize,
    basis_names: Vec<String>,
    constants: Vec<RawConstant>,
}

impl FiniteLieAlgebra {
    pub fn new(
        dim: usize,
        basis_names: Vec<String>,
        constants: impl IntoIterator<Item = ((usize, usize, usize), Rational)>,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension must be positive".into()));
        }
        if basis_names.len() != dim {
            return Err(Error::InvalidAlgebra(format!(
                "expected {} basis names, got {}",
                dim,
                basis_names.len()
            )));
        }
        let mut table = BTreeMap::new();
        for ((a, b, c), v) in constants {
            if a >= dim || b >= dim || c >= dim {
                return Err(Error::InvalidAlgebra(format!(
                    "index triple ({}, {}, {}) out of range for dim {}",
                    a, b, c, dim
                )));
            }
            if v.is_zero() {
                continue;
            }
            if table.insert((a, b, c), v).is_some() {
                return Err(Error::InvalidAlgebra(format!(
                    "duplicate constant for ({}, {}, {})",
                    a, b, c
                )));
            }
        }
        let mut alg = FiniteLieAlgebra { dim, basis_names, constants: table, killing: Vec::new() };
        alg.killing = alg.compute_killing();
        Ok(alg)
    }

    /// `sl2` with basis `(e, h, f)`: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
    pub fn sl2() -> Self {
        let two = Rational::from_int(2);
        let consts = vec![
            ((1, 0, 0), two.clone()),
            ((0, 1, 0), -&two),
            ((1, 2, 2), -&two),
            ((2, 1, 2), two),
            ((0, 2, 1), Rational::one()),
            ((2, 0, 1), -&Rational::one()),
        ];
        FiniteLieAlgebra::new(3, vec!["e".into(), "h".into(), "f".into()], consts)
            .expect("built-in sl2 table is well-formed")
    }

    /// Ingest from the structured text format
    /// `{dim, basis_names, constants: [{a, b, c, value}]}` with 0-based
    /// indices and rational string values.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawAlgebra = serde_json::from_str(text)
            .map_err(|e| Error::InvalidAlgebra(format!("parse error: {}", e)))?;
        FiniteLieAlgebra::new(
            raw.dim,
            raw.basis_names,
            raw.constants.into_iter().map(|r| ((r.a, r.b, r.c), r.value)),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_names(&self) -> &[String] {
        &self.basis_names
    }

    pub fn constant(&self, a: usize, b: usize, c: usize) -> Rational {
        self.constants.get(&(a, b, c)).cloned().unwrap_or_else(Rational::zero)
    }

    /// `[T_a, T_b]` as a sparse vector over the basis.
    pub fn bracket(&self, a: usize, b: usize) -> FdElement {
        let mut out = FdElement::new();
        for c in 0..self.dim {
            let v = self.constant(a, b, c);
            if !v.is_zero() {
                out.insert(c, v);
            }
        }
        out
    }

    fn compute_killing(&self) -> Vec<Vec<Rational>> {
        // κ(a,b) = Σ_{c,e} C^e_{a,c} C^c_{b,e} = tr(ad a ∘ ad b)
        let mut k = vec![vec![Rational::zero(); self.dim]; self.dim];
        for a in 0..self.dim {
            for b in 0..self.dim {
                let mut t = Rational::zero();
                for c in 0..self.dim {
                    for e in 0..self.dim {
                        let x = self.constant(a, c, e);
                        if x.is_zero() {
                            continue;
                        }
                        let y = self.constant(b, e, c);
                        if y.is_zero() {
                            continue;
                        }
                        t = &t + &(&x * &y);
                    }
                }
                k[a][b] = t;
            }
        }
        k
    }

    /// The Cartan-Killing form `β(a, b) = tr(ad a ∘ ad b)`, computed exactly
    /// from the structure constants.
    pub fn killing_form(&self, a: usize, b: usize) -> Rational {
        self.killing[a][b].clone()
    }

    /// Check antisymmetry and the Jacobi identity over all index tuples.
    pub fn validate(&self) -> FdValidation {
        let mut antisymmetry_checked = 0usize;
        for a in 0..self.dim {
            for b in 0..self.dim {
                for c in 0..self.dim {
                    antisymmetry_checked += 1;
                    let r = &self.constant(a, b, c) + &self.constant(b, a, c);
                    if !r.is_zero() {
                        return FdValidation {
                            pass: false,
                            antisymmetry_checked,
                            jacobi_checked: 0,
                            violation: Some(FdViolation {
                                law: "antisymmetry".into(),
                                indices: vec![a, b, c],
                                residual: r.to_string(),
                            }),
                        };
                    }
                }
            }
        }
        let mut jacobi_checked = 0usize;
        for a in 0..self.dim {
            for b in 0..self.dim {
                for c in 0..self.dim {
                    for d in 0..self.dim {
                        jacobi_checked += 1;
                        let mut sum = Rational::zero();
                        for l in 0..self.dim {
                            sum = &sum
                                + &(&self.constant(a, b, l) * &self.constant(l, c, d));
                            sum = &sum
                                + &(&self.constant(b, c, l) * &self.constant(l, a, d));
                            sum = &sum
                                + &(&self.constant(c, a, l) * &self.constant(l, b, d));
                        }
                        if !sum.is_zero() {
                            return FdValidation {
                                pass: false,
                                antisymmetry_checked,
                                jacobi_checked,
                                violation: Some(FdViolation {
                                    law: "jacobi".into(),
                                    indices: vec![a, b, c, d],
                                    residual: sum.to_string(),
                                }),
                            };
                        }
                    }
                }
            }
        }
        FdValidation { pass: true, antisymmetry_checked, jacobi_checked, violation: None }
    }
}

/// Outcome of [`FiniteLieAlgebra::validate`].  Violations are report content,
/// not errors.
#[derive(Clone, Debug, Serialize)]
pub struct FdValidation {
    pub pass: bool,
    pub antisymmetry_checked: usize,
    pub jacobi_checked: usize,
    pub violation: Option<FdViolation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FdViolation {
    pub law: String,
    pub indices: Vec<usize>,
    pub residual: String,
}

/// A finite inclusive degree range used for all desk-scale verification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Window {
    lo: i64,
    hi: i64,
}

impl Window {
    pub fn new(lo: i64, hi: i64) -> Result<Self> {
        if lo > hi {
            return Err(Error::InvalidWindow { lo, hi });
        }
        Ok(Window { lo, hi })
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.hi
    }

    pub fn contains(&self, n: i64) -> bool {
        self.lo <= n && n <= self.hi
    }

    pub fn iter(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false // lo <= hi is an invariant
    }
}

impl fmt::Display for Window {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Minimal `R` and maximal `S` such that every structural pairing of window
/// basis elements lands in degrees `[n+m+R, n+m+S]`.  `(0, 0)` when nothing
/// is nonzero on the window.
pub fn almost_grading_bounds(family: &LieFamily, w: &Window) -> (i64, i64) {
    let mut bounds: Option<(i64, i64)> = None;
    for n in w.iter() {
        for m in w.iter() {
            for (deg, coeff) in family.structural_rule(n, m) {
                if coeff.is_zero() {
                    continue;
                }
                let off = deg - n - m;
                bounds = Some(match bounds {
                    None => (off, off),
                    Some((r, s)) => (r.min(off), s.max(off)),
                });
            }
        }
    }
    bounds.unwrap_or((0, 0))
}
