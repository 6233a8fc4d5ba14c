//! The concrete bracket families: the Witt algebra, the genus-one vector
//! field families over the `(e1, e2)` plane, the lines `D_s` and the curve
//! `C`, the genus-one function algebra, and the classical and genus-one
//! current algebras.
//!
//! A family stores one canonical parity case of its structure rule; the
//! opposite ordering is always produced by antisymmetry.  The third branch
//! point is never an independent parameter: `e3 = -(e1+e2)` is eliminated
//! before any coefficient is stored, so `(e1-e2)(e1-e3)` enters as
//! `(e1-e2)(2e1+e2)`.  Specialization substitutes into the stored
//! coefficients and never re-derives a table.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{Param, ParamPolynomial, Rational};
use crate::liecore::{Element, FiniteLieAlgebra, GeneratorId, GeneratorKind, Window};

/// How the structural rule extends to the opposite argument order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Symmetry {
    /// Lie bracket: `rule(m, n) = -rule(n, m)`.
    Antisymmetric,
    /// Associative product of the function algebra: `rule(m, n) = rule(n, m)`.
    Symmetric,
}

type RuleFn = dyn Fn(i64, i64) -> Vec<(i64, ParamPolynomial)> + Send + Sync;

/// A parity-cased degree rule `(n, m) -> [(output degree, coefficient)]`
/// together with an optional finite-dimensional factor for current families.
///
/// Immutable; cloning is cheap and all evaluation is pure.
#[derive(Clone)]
pub struct LieFamily {
    name: String,
    kind: GeneratorKind,
    symmetry: Symmetry,
    rule_parameters: BTreeSet<Param>,
    rule: Arc<RuleFn>,
    substitution: BTreeMap<Param, ParamPolynomial>,
    fd: Option<Arc<FiniteLieAlgebra>>,
}

fn poly_e1() -> ParamPolynomial {
    ParamPolynomial::var(Param::E1)
}

fn poly_e2() -> ParamPolynomial {
    ParamPolynomial::var(Param::E2)
}

/// `(e1-e2)(e1-e3)` after eliminating `e3 = -(e1+e2)`, i.e.
/// `(e1-e2)(2e1+e2) = 2e1^2 - e1*e2 - e2^2`.
pub fn quartic_coefficient() -> ParamPolynomial {
    &(&poly_e1() - &poly_e2()) * &(&poly_e1().scale_int(2) + &poly_e2())
}

/// `3 e1`, the coefficient of the degree `n+m-2` term.
pub fn quadratic_coefficient() -> ParamPolynomial {
    poly_e1().scale_int(3)
}

fn is_odd(n: i64) -> bool {
    n.rem_euclid(2) == 1
}

fn negated(rule: Vec<(i64, ParamPolynomial)>) -> Vec<(i64, ParamPolynomial)> {
    rule.into_iter().map(|(d, c)| (d, -&c)).collect()
}

fn witt_rule(n: i64, m: i64) -> Vec<(i64, ParamPolynomial)> {
    vec![(n + m, ParamPolynomial::from_int(m - n))]
}

fn genus1_vf_rule(n: i64, m: i64) -> Vec<(i64, ParamPolynomial)> {
    let d = m - n;
    match (is_odd(n), is_odd(m)) {
        (true, true) => vec![(n + m, ParamPolynomial::from_int(d))],
        (false, false) => vec![
            (n + m, ParamPolynomial::from_int(d)),
            (n + m - 2, quadratic_coefficient().scale_int(d)),
            (n + m - 4, quartic_coefficient().scale_int(d)),
        ],
        (true, false) => vec![
            (n + m, ParamPolynomial::from_int(d)),
            (n + m - 2, quadratic_coefficient().scale_int(d - 1)),
            (n + m - 4, quartic_coefficient().scale_int(d - 2)),
        ],
        (false, true) => negated(genus1_vf_rule(m, n)),
    }
}

fn genus1_product_rule(n: i64, m: i64) -> Vec<(i64, ParamPolynomial)> {
    if is_odd(n) && is_odd(m) {
        vec![
            (n + m, ParamPolynomial::one()),
            (n + m - 2, quadratic_coefficient()),
            (n + m - 4, quartic_coefficient()),
        ]
    } else {
        vec![(n + m, ParamPolynomial::one())]
    }
}

fn laurent_product_rule(n: i64, m: i64) -> Vec<(i64, ParamPolynomial)> {
    vec![(n + m, ParamPolynomial::one())]
}

impl LieFamily {
    fn stock(
        name: &str,
        kind: GeneratorKind,
        symmetry: Symmetry,
        rule_parameters: &[Param],
        rule: Arc<RuleFn>,
        fd: Option<FiniteLieAlgebra>,
    ) -> Self {
        LieFamily {
            name: name.to_string(),
            kind,
            symmetry,
            rule_parameters: rule_parameters.iter().copied().collect(),
            rule,
            substitution: BTreeMap::new(),
            fd: fd.map(Arc::new),
        }
    }

    /// `[l_n, l_m] = (m-n) l_{n+m}`.
    pub fn witt() -> Self {
        LieFamily::stock(
            "witt",
            GeneratorKind::VectorField,
            Symmetry::Antisymmetric,
            &[],
            Arc::new(witt_rule),
            None,
        )
    }

    /// The two-parameter genus-one vector field family over `(e1, e2)`.
    pub fn genus1_vf_2param() -> Self {
        LieFamily::stock(
            "genus1_vf_2param",
            GeneratorKind::VectorField,
            Symmetry::Antisymmetric,
            &[Param::E1, Param::E2],
            Arc::new(genus1_vf_rule),
            None,
        )
    }

    /// The family along the line `D_s`: `e2 = s * e1`, with `s` symbolic.
    pub fn genus1_vf_ds() -> Self {
        let mut bind = BTreeMap::new();
        bind.insert(Param::E2, &ParamPolynomial::var(Param::S) * &poly_e1());
        let mut f = LieFamily::genus1_vf_2param()
            .specialize(&bind)
            .expect("e2 is a parameter of the two-parameter family");
        f.name = "genus1_vf_Ds".to_string();
        f
    }

    /// The family along the smooth rational curve `C`: `e2 = 2 e1^2`.
    pub fn genus1_vf_curve_c() -> Self {
        let mut bind = BTreeMap::new();
        bind.insert(Param::E2, poly_e1().pow(2).scale_int(2));
        let mut f = LieFamily::genus1_vf_2param()
            .specialize(&bind)
            .expect("e2 is a parameter of the two-parameter family");
        f.name = "genus1_vf_curveC".to_string();
        f
    }

    /// The genus-one function algebra `A_n` with its commutative product.
    /// Its induced Lie bracket (the commutator) vanishes identically.
    pub fn function_algebra() -> Self {
        LieFamily::stock(
            "function_algebra",
            GeneratorKind::Function,
            Symmetry::Symmetric,
            &[Param::E1, Param::E2],
            Arc::new(genus1_product_rule),
            None,
        )
    }

    /// `g ⊗ C[z^{-1}, z]` with `[x ⊗ z^n, y ⊗ z^m] = [x,y] ⊗ z^{n+m}`.
    pub fn classical_current(g: FiniteLieAlgebra) -> Self {
        LieFamily::stock(
            "classical_current",
            GeneratorKind::Current,
            Symmetry::Antisymmetric,
            &[],
            Arc::new(laurent_product_rule),
            Some(g),
        )
    }

    /// The genus-one current family `g ⊗ A` over `(e1, e2)`.
    pub fn genus1_current(g: FiniteLieAlgebra) -> Self {
        LieFamily::stock(
            "genus1_current",
            GeneratorKind::Current,
            Symmetry::Antisymmetric,
            &[Param::E1, Param::E2],
            Arc::new(genus1_product_rule),
            Some(g),
        )
    }

    /// Look up a shipped family by its identifier.  Current families take
    /// the given finite-dimensional algebra, defaulting to `sl2`.
    pub fn by_name(name: &str, fd: Option<FiniteLieAlgebra>) -> Result<Self> {
        let fd_or_sl2 = || fd.clone().unwrap_or_else(FiniteLieAlgebra::sl2);
        match name {
            "witt" => Ok(LieFamily::witt()),
            "genus1_vf_2param" => Ok(LieFamily::genus1_vf_2param()),
            "genus1_vf_Ds" => Ok(LieFamily::genus1_vf_ds()),
            "genus1_vf_curveC" => Ok(LieFamily::genus1_vf_curve_c()),
            "classical_current" => Ok(LieFamily::classical_current(fd_or_sl2())),
            "genus1_current" => Ok(LieFamily::genus1_current(fd_or_sl2())),
            "function_algebra" => Ok(LieFamily::function_algebra()),
            other => Err(Error::UnknownParameter(format!("family `{}`", other))),
        }
    }

    /// All shipped family names, for CLI help and sweep tests.
    pub const NAMES: [&'static str; 7] = [
        "witt",
        "genus1_vf_2param",
        "genus1_vf_Ds",
        "genus1_vf_curveC",
        "classical_current",
        "genus1_current",
        "function_algebra",
    ];

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn fd_algebra(&self) -> Option<&FiniteLieAlgebra> {
        self.fd.as_deref()
    }

    pub fn fd_names(&self) -> Option<&[String]> {
        self.fd.as_deref().map(|g| g.basis_names())
    }

    /// Parameters still free after the accumulated substitutions.
    pub fn parameters(&self) -> BTreeSet<Param> {
        let mut out = BTreeSet::new();
        for p in &self.rule_parameters {
            match self.substitution.get(p) {
                Some(v) => out.extend(v.params()),
                None => {
                    out.insert(*p);
                }
            }
        }
        out
    }

    /// Apply this family's accumulated substitution to a polynomial, so that
    /// data defined on the unspecialized parameter plane (cocycle values,
    /// prefactors) follows the family through `specialize`.
    pub fn apply_substitution(&self, p: &ParamPolynomial) -> ParamPolynomial {
        p.substitute(&self.substitution)
    }

    /// The canonical degree rule with substitutions applied and zero
    /// coefficients dropped.  For current families this is the function
    /// product factor of the bracket.
    pub fn structural_rule(&self, n: i64, m: i64) -> Vec<(i64, ParamPolynomial)> {
        (self.rule)(n, m)
            .into_iter()
            .map(|(d, c)| (d, c.substitute(&self.substitution)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    fn expect_kind(&self, g: GeneratorId) -> Result<()> {
        if g.kind() == self.kind {
            Ok(())
        } else {
            Err(Error::KindMismatch {
                generator: g.display_with(self.fd_names()),
                context: format!("family `{}`", self.name),
            })
        }
    }

    /// Bracket of two basis symbols.  Central generators commute with
    /// everything; other kinds must match the family.
    pub fn bracket_basis(&self, x: GeneratorId, y: GeneratorId) -> Result<Element> {
        if x.kind() == GeneratorKind::Central || y.kind() == GeneratorKind::Central {
            return Ok(Element::zero());
        }
        self.expect_kind(x)?;
        self.expect_kind(y)?;
        match self.kind {
            GeneratorKind::VectorField => {
                let mut out = Element::zero();
                for (d, c) in self.structural_rule(x.degree(), y.degree()) {
                    out.add_term(GeneratorId::vector_field(d), c);
                }
                Ok(out)
            }
            // The function algebra is commutative, so its commutator is zero.
            GeneratorKind::Function => Ok(Element::zero()),
            GeneratorKind::Current => {
                let fd = self.fd.as_deref().expect("current family carries an fd algebra");
                let a = x.fd_index().expect("current generator has fd index");
                let b = y.fd_index().expect("current generator has fd index");
                if a >= fd.dim() || b >= fd.dim() {
                    return Err(Error::KindMismatch {
                        generator: x.display_with(self.fd_names()),
                        context: format!("fd index out of range for family `{}`", self.name),
                    });
                }
                let mut out = Element::zero();
                for (c, cf) in fd.bracket(a, b) {
                    for (d, q) in self.structural_rule(x.degree(), y.degree()) {
                        out.add_term(GeneratorId::current(c, d), q.scale(&cf));
                    }
                }
                Ok(out)
            }
            GeneratorKind::Central => unreachable!("no central families"),
        }
    }

    /// Bilinear extension of the bracket to arbitrary elements.
    pub fn bracket(&self, x: &Element, y: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (gx, cx) in x.terms() {
            for (gy, cy) in y.terms() {
                let b = self.bracket_basis(*gx, *gy)?;
                out.add_scaled(&b, &(cx * cy));
            }
        }
        Ok(out)
    }

    /// Product of two function-algebra basis symbols, `A_n · A_m`.
    /// Available on function and current families.
    pub fn product_basis(&self, n: i64, m: i64) -> Result<Element> {
        match self.kind {
            GeneratorKind::Function | GeneratorKind::Current => {
                let mut out = Element::zero();
                for (d, c) in self.structural_rule(n, m) {
                    out.add_term(GeneratorId::function(d), c);
                }
                Ok(out)
            }
            _ => Err(Error::KindMismatch {
                generator: format!("A_{}", n),
                context: format!("family `{}` has no function product", self.name),
            }),
        }
    }

    /// Product extended bilinearly to function-supported elements.
    pub fn product(&self, x: &Element, y: &Element) -> Result<Element> {
        let mut out = Element::zero();
        for (gx, cx) in x.terms() {
            for (gy, cy) in y.terms() {
                if gx.kind() != GeneratorKind::Function || gy.kind() != GeneratorKind::Function {
                    return Err(Error::KindMismatch {
                        generator: gx.display_with(None),
                        context: format!("product in family `{}`", self.name),
                    });
                }
                let b = self.product_basis(gx.degree(), gy.degree())?;
                out.add_scaled(&b, &(cx * cy));
            }
        }
        Ok(out)
    }

    /// Coefficient-wise substitution.  Binding keys must be free parameters
    /// of the family; bindings may introduce new parameters (`e2 <- s*e1`).
    pub fn specialize(&self, bindings: &BTreeMap<Param, ParamPolynomial>) -> Result<LieFamily> {
        let free = self.parameters();
        for p in bindings.keys() {
            if !free.contains(p) {
                return Err(Error::UnboundParameter(*p));
            }
        }
        let mut substitution: BTreeMap<Param, ParamPolynomial> = self
            .substitution
            .iter()
            .map(|(k, v)| (*k, v.substitute(bindings)))
            .collect();
        for (k, v) in bindings {
            substitution.entry(*k).or_insert_with(|| v.clone());
        }
        let rendered: Vec<String> =
            bindings.iter().map(|(k, v)| format!("{}={}", k, v)).collect();
        Ok(LieFamily {
            name: format!("{}[{}]", self.name, rendered.join(",")),
            substitution,
            ..self.clone()
        })
    }

    /// Specialize at a rational point.
    pub fn specialize_at(&self, point: &BTreeMap<Param, Rational>) -> Result<LieFamily> {
        self.specialize(&constant_bindings(point))
    }

    /// A new family with the same metadata but a different raw rule; used by
    /// the rescaling transport.
    pub(crate) fn with_rule(
        &self,
        name: String,
        rule_parameters: BTreeSet<Param>,
        rule: Arc<RuleFn>,
    ) -> LieFamily {
        LieFamily {
            name,
            kind: self.kind,
            symmetry: self.symmetry,
            rule_parameters,
            rule,
            substitution: BTreeMap::new(),
            fd: self.fd.clone(),
        }
    }

    /// The graded basis symbols with degrees in the window, in canonical
    /// order.
    pub fn window_basis(&self, w: &Window) -> Vec<GeneratorId> {
        let mut out = Vec::new();
        for n in w.iter() {
            match self.kind {
                GeneratorKind::VectorField => out.push(GeneratorId::vector_field(n)),
                GeneratorKind::Function => out.push(GeneratorId::function(n)),
                GeneratorKind::Current => {
                    let dim = self.fd.as_deref().map(|g| g.dim()).unwrap_or(0);
                    for i in 0..dim {
                        out.push(GeneratorId::current(i, n));
                    }
                }
                GeneratorKind::Central => {}
            }
        }
        out.sort();
        out
    }

    /// The value tabulated for a canonical basis pair: the bracket for Lie
    /// families, the product for the function algebra.
    pub fn table_value(&self, x: GeneratorId, y: GeneratorId) -> Result<Element> {
        match self.symmetry {
            Symmetry::Antisymmetric => self.bracket_basis(x, y),
            Symmetry::Symmetric => self.product_basis(x.degree(), y.degree()),
        }
    }

    /// Antisymmetry plus the Jacobi identity over all window basis triples.
    /// In symbolic mode every residual must be the zero polynomial; at a
    /// point, coefficients are substituted first.  Violations are report
    /// content, not errors.
    pub fn jacobi_check(&self, w: &Window, mode: &CheckMode) -> Result<JacobiReport> {
        let fam = match mode {
            CheckMode::Symbolic => self.clone(),
            CheckMode::AtPoint(point) => self.specialize_at(point)?,
        };
        let basis = fam.window_basis(w);
        let names = fam.fd_names();
        let mut report = JacobiReport {
            family: self.name.clone(),
            window: *w,
            mode: mode.label(),
            params: mode.param_strings(),
            antisymmetry_pairs_checked: 0,
            jacobi_triples_checked: 0,
            pass: true,
            first_violation: None,
        };

        // Pair brackets, reused by the triple loop below.
        let n = basis.len();
        let mut pair = vec![Vec::<Element>::new(); n];
        for i in 0..n {
            pair[i] = Vec::with_capacity(n - i);
            for j in i..n {
                let fwd = fam.bracket_basis(basis[i], basis[j])?;
                let bwd = fam.bracket_basis(basis[j], basis[i])?;
                report.antisymmetry_pairs_checked += 1;
                let sum = fwd.add(&bwd);
                if !sum.is_zero() {
                    report.pass = false;
                    report.first_violation = Some(LawViolation {
                        law: "antisymmetry".into(),
                        generators: vec![
                            basis[i].display_with(names),
                            basis[j].display_with(names),
                        ],
                        residual: sum.display_with(names),
                    });
                    return Ok(report);
                }
                pair[i].push(fwd);
            }
        }

        // With antisymmetry verified, the Jacobi expression is alternating,
        // so unordered triples i <= j <= k cover all basis triples.
        for i in 0..n {
            for j in i..n {
                for k in j..n {
                    report.jacobi_triples_checked += 1;
                    let mut res = fam.bracket(&pair[i][j - i], &Element::generator(basis[k]))?;
                    res = res.add(&fam.bracket(&pair[j][k - j], &Element::generator(basis[i]))?);
                    res = res.sub(&fam.bracket(&pair[i][k - i], &Element::generator(basis[j]))?);
                    if !res.is_zero() {
                        report.pass = false;
                        report.first_violation = Some(LawViolation {
                            law: "jacobi".into(),
                            generators: vec![
                                basis[i].display_with(names),
                                basis[j].display_with(names),
                                basis[k].display_with(names),
                            ],
                            residual: res.display_with(names),
                        });
                        return Ok(report);
                    }
                }
            }
        }
        Ok(report)
    }

    /// All canonical-case pairings `x <= y` on the window, nonzero rows only.
    pub fn structure_table(&self, w: &Window, mode: &CheckMode) -> Result<StructureTable> {
        let fam = match mode {
            CheckMode::Symbolic => self.clone(),
            CheckMode::AtPoint(point) => self.specialize_at(point)?,
        };
        let basis = fam.window_basis(w);
        let names = fam.fd_names();
        let mut rows = Vec::new();
        for (i, &x) in basis.iter().enumerate() {
            for &y in &basis[i..] {
                let value = fam.table_value(x, y)?;
                if value.is_zero() {
                    continue;
                }
                rows.push(TableRow {
                    x: x.display_with(names),
                    y: y.display_with(names),
                    n: x.degree(),
                    m: y.degree(),
                    terms: value
                        .terms()
                        .map(|(g, c)| TableTerm {
                            generator: g.display_with(names),
                            coeff: c.clone(),
                        })
                        .collect(),
                });
            }
        }
        Ok(StructureTable {
            family: self.name.clone(),
            pairing: match self.symmetry {
                Symmetry::Antisymmetric => "bracket".into(),
                Symmetry::Symmetric => "product".into(),
            },
            window: *w,
            mode: mode.label(),
            params: mode.param_strings(),
            rows,
        })
    }
}

/// Symbolic coefficients, or substitution at a rational point.
#[derive(Clone, Debug)]
pub enum CheckMode {
    Symbolic,
    AtPoint(BTreeMap<Param, Rational>),
}

impl CheckMode {
    pub fn at_origin(params: impl IntoIterator<Item = Param>) -> Self {
        CheckMode::AtPoint(params.into_iter().map(|p| (p, Rational::zero())).collect())
    }

    fn label(&self) -> String {
        match self {
            CheckMode::Symbolic => "symbolic".into(),
            CheckMode::AtPoint(_) => "at-point".into(),
        }
    }

    fn param_strings(&self) -> BTreeMap<String, String> {
        match self {
            CheckMode::Symbolic => BTreeMap::new(),
            CheckMode::AtPoint(b) => b
                .iter()
                .map(|(k, v)| (k.name().to_string(), v.to_string()))
                .collect(),
        }
    }
}

pub fn constant_bindings(point: &BTreeMap<Param, Rational>) -> BTreeMap<Param, ParamPolynomial> {
    point
        .iter()
        .map(|(p, r)| (*p, ParamPolynomial::constant(r.clone())))
        .collect()
}

/// `A_n · A_m` in the genus-one function algebra.
pub fn function_product(n: i64, m: i64) -> Element {
    LieFamily::function_algebra()
        .product_basis(n, m)
        .expect("function algebra always has a product")
}

/// First coefficient difference between the tables of two families on a
/// window, or `None` if they agree pair by pair.
pub fn first_table_difference(
    a: &LieFamily,
    b: &LieFamily,
    w: &Window,
) -> Result<Option<TableDifference>> {
    if a.kind() != b.kind() {
        return Err(Error::KindMismatch {
            generator: format!("family `{}`", b.name()),
            context: format!("comparison against `{}`", a.name()),
        });
    }
    let basis = a.window_basis(w);
    let names = a.fd_names();
    for &x in &basis {
        for &y in &basis {
            let left = a.table_value(x, y)?;
            let right = b.table_value(x, y)?;
            if left != right {
                return Ok(Some(TableDifference {
                    x: x.display_with(names),
                    y: y.display_with(names),
                    left: left.display_with(names),
                    right: right.display_with(names),
                }));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, Serialize)]
pub struct TableDifference {
    pub x: String,
    pub y: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LawViolation {
    pub law: String,
    pub generators: Vec<String>,
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct JacobiReport {
    pub family: String,
    pub window: Window,
    pub mode: String,
    pub params: BTreeMap<String, String>,
    pub antisymmetry_pairs_checked: usize,
    pub jacobi_triples_checked: usize,
    pub pass: bool,
    pub first_violation: Option<LawViolation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableTerm {
    pub generator: String,
    pub coeff: ParamPolynomial,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableRow {
    pub x: String,
    pub y: String,
    pub n: i64,
    pub m: i64,
    pub terms: Vec<TableTerm>,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureTable {
    pub family: String,
    pub pairing: String,
    pub window: Window,
    pub mode: String,
    pub params: BTreeMap<String, String>,
    pub rows: Vec<TableRow>,
}

impl StructureTable {
    /// CSV with one line per output generator:
    /// `n,m,x,y,generator,coefficient`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,m,x,y,generator,coefficient\n");
        for row in &self.rows {
            for term in &row.terms {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    row.n, row.m, row.x, row.y, term.generator, term.coeff
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(lo: i64, hi: i64) -> Window {
        Window::new(lo, hi).unwrap()
    }

    fn vf(n: i64) -> GeneratorId {
        GeneratorId::vector_field(n)
    }

    #[test]
    fn two_param_bracket_examples() {
        let f = LieFamily::genus1_vf_2param();
        // [V1, V3] = 2 V4 (odd, odd)
        let b = f.bracket_basis(vf(1), vf(3)).unwrap();
        assert_eq!(b, Element::term(vf(4), ParamPolynomial::from_int(2)));
        // [V0, V0] = 0
        assert!(f.bracket_basis(vf(0), vf(0)).unwrap().is_zero());
        // [V2, V4] = 2 V6 + 6 e1 V4 + 2 (e1-e2)(2e1+e2) V2
        let b = f.bracket_basis(vf(2), vf(4)).unwrap();
        assert_eq!(b.coefficient(&vf(6)), ParamPolynomial::from_int(2));
        assert_eq!(b.coefficient(&vf(4)), ParamPolynomial::var(Param::E1).scale_int(6));
        assert_eq!(b.coefficient(&vf(2)), quartic_coefficient().scale_int(2));
        assert_eq!(b.num_terms(), 3);
        // [V1, V2] = V3 + 0*V1 - (e1-e2)(2e1+e2) V_{-1}
        let b = f.bracket_basis(vf(1), vf(2)).unwrap();
        assert_eq!(b.coefficient(&vf(3)), ParamPolynomial::one());
        assert!(b.coefficient(&vf(1)).is_zero());
        assert_eq!(b.coefficient(&vf(-1)), -&quartic_coefficient());
        assert_eq!(b.num_terms(), 2);
    }

    #[test]
    fn kind_mismatch_is_rejected() {
        let f = LieFamily::genus1_vf_2param();
        let err = f
            .bracket(
                &Element::generator(GeneratorId::function(1)),
                &Element::generator(vf(2)),
            )
            .unwrap_err();
        assert!(matches!(err, Error::KindMismatch { .. }));
    }

    #[test]
    fn function_product_examples() {
        // A2 * A3 = A5
        assert_eq!(
            function_product(2, 3),
            Element::generator(GeneratorId::function(5))
        );
        // A0 is the unit
        for n in -5..=5 {
            assert_eq!(
                function_product(0, n),
                Element::generator(GeneratorId::function(n))
            );
        }
        // A1 * A1 = A2 + 3 e1 A0 + (e1-e2)(2e1+e2) A_{-2}
        let p = function_product(1, 1);
        assert_eq!(p.coefficient(&GeneratorId::function(2)), ParamPolynomial::one());
        assert_eq!(p.coefficient(&GeneratorId::function(0)), quadratic_coefficient());
        assert_eq!(p.coefficient(&GeneratorId::function(-2)), quartic_coefficient());
    }

    #[test]
    fn current_bracket_examples() {
        let f = LieFamily::genus1_current(FiniteLieAlgebra::sl2());
        let (e, h, fgen) = (0usize, 1usize, 2usize);
        // [h ⊗ A1, e ⊗ A2] = 2 e ⊗ A3 (mixed parity)
        let b = f
            .bracket_basis(GeneratorId::current(h, 1), GeneratorId::current(e, 2))
            .unwrap();
        assert_eq!(b, Element::term(GeneratorId::current(e, 3), ParamPolynomial::from_int(2)));
        // [h ⊗ A1, h ⊗ A1] = 0
        assert!(f
            .bracket_basis(GeneratorId::current(h, 1), GeneratorId::current(h, 1))
            .unwrap()
            .is_zero());
        // [e ⊗ A1, f ⊗ A1] = h ⊗ A2 + 3e1 h ⊗ A0 + (e1-e2)(2e1+e2) h ⊗ A_{-2}
        let b = f
            .bracket_basis(GeneratorId::current(e, 1), GeneratorId::current(fgen, 1))
            .unwrap();
        assert_eq!(b.coefficient(&GeneratorId::current(h, 2)), ParamPolynomial::one());
        assert_eq!(b.coefficient(&GeneratorId::current(h, 0)), quadratic_coefficient());
        assert_eq!(b.coefficient(&GeneratorId::current(h, -2)), quartic_coefficient());
        assert_eq!(b.num_terms(), 3);
    }

    #[test]
    fn specialize_to_witt_and_ds() {
        let f = LieFamily::genus1_vf_2param();
        let mut origin = BTreeMap::new();
        origin.insert(Param::E1, Rational::zero());
        origin.insert(Param::E2, Rational::zero());
        let at_origin = f.specialize_at(&origin).unwrap();
        assert!(first_table_difference(&at_origin, &LieFamily::witt(), &w(-6, 6))
            .unwrap()
            .is_none());

        // e2 <- s e1 reproduces the D_s family
        let mut bind = BTreeMap::new();
        bind.insert(Param::E2, &ParamPolynomial::var(Param::S) * &poly_e1());
        let ds = f.specialize(&bind).unwrap();
        assert!(first_table_difference(&ds, &LieFamily::genus1_vf_ds(), &w(-6, 6))
            .unwrap()
            .is_none());

        // even-even V_{n+m-4} coefficient on D_s is e1^2 (1-s)(2+s), expanded
        let b = LieFamily::genus1_vf_ds().bracket_basis(vf(0), vf(2)).unwrap();
        let s = ParamPolynomial::var(Param::S);
        let want = &poly_e1().pow(2)
            * &(&(&ParamPolynomial::one() - &s) * &(&ParamPolynomial::from_int(2) + &s));
        assert_eq!(b.coefficient(&vf(-2)), want.scale_int(2));
    }

    #[test]
    fn specialize_ds_infinity_line() {
        // e1 <- 0 in the two-parameter family: the D_infinity fiber,
        // even-even bracket (m-n)(V_{n+m} - e2^2 V_{n+m-4}).
        let mut bind = BTreeMap::new();
        bind.insert(Param::E1, ParamPolynomial::zero());
        let d_inf = LieFamily::genus1_vf_2param().specialize(&bind).unwrap();
        let b = d_inf.bracket_basis(vf(0), vf(2)).unwrap();
        assert_eq!(b.coefficient(&vf(2)), ParamPolynomial::from_int(2));
        assert!(b.coefficient(&vf(0)).is_zero());
        assert_eq!(
            b.coefficient(&vf(-2)),
            -&ParamPolynomial::var(Param::E2).pow(2).scale_int(2)
        );
    }

    #[test]
    fn specialize_rejects_unknown_binding() {
        let err = LieFamily::witt()
            .specialize(&BTreeMap::from([(Param::E1, ParamPolynomial::zero())]))
            .unwrap_err();
        assert_eq!(err, Error::UnboundParameter(Param::E1));
    }

    #[test]
    fn specialization_coherence_on_brackets() {
        // bracket(specialize(f, b), x, y) = substitute(b, bracket(f, x, y))
        let f = LieFamily::genus1_vf_2param();
        let mut bind = BTreeMap::new();
        bind.insert(Param::E2, poly_e1().pow(2).scale_int(2));
        let g = f.specialize(&bind).unwrap();
        for n in -4..=4 {
            for m in -4..=4 {
                let lhs = g.bracket_basis(vf(n), vf(m)).unwrap();
                let rhs = f.bracket_basis(vf(n), vf(m)).unwrap().substitute(&bind);
                assert_eq!(lhs, rhs, "pair ({}, {})", n, m);
            }
        }
    }

    #[test]
    fn jacobi_passes_symbolically() {
        let report = LieFamily::genus1_vf_2param()
            .jacobi_check(&w(-4, 4), &CheckMode::Symbolic)
            .unwrap();
        assert!(report.pass, "{:?}", report.first_violation);
        let report = LieFamily::witt()
            .jacobi_check(&w(-8, 8), &CheckMode::Symbolic)
            .unwrap();
        assert!(report.pass);
    }

    #[test]
    fn jacobi_detects_mutation() {
        // Replace the even-even V_{n+m-2} coefficient 3e1 by 4e1.
        let mutated = LieFamily::genus1_vf_2param().with_rule(
            "mutated".into(),
            [Param::E1, Param::E2].into_iter().collect(),
            Arc::new(|n, m| {
                let d = m - n;
                match (is_odd(n), is_odd(m)) {
                    (true, true) => vec![(n + m, ParamPolynomial::from_int(d))],
                    (false, false) => vec![
                        (n + m, ParamPolynomial::from_int(d)),
                        (n + m - 2, poly_e1().scale_int(4 * d)),
                        (n + m - 4, quartic_coefficient().scale_int(d)),
                    ],
                    (true, false) => vec![
                        (n + m, ParamPolynomial::from_int(d)),
                        (n + m - 2, poly_e1().scale_int(3 * (d - 1))),
                        (n + m - 4, quartic_coefficient().scale_int(d - 2)),
                    ],
                    (false, true) => {
                        let d2 = n - m;
                        vec![
                            (n + m, ParamPolynomial::from_int(-d2)),
                            (n + m - 2, poly_e1().scale_int(-4 * d2)),
                            (n + m - 4, quartic_coefficient().scale_int(-(d2 - 2))),
                        ]
                    }
                }
            }),
        );
        let report = mutated.jacobi_check(&w(-4, 4), &CheckMode::Symbolic).unwrap();
        assert!(!report.pass);
        assert_eq!(report.first_violation.unwrap().law, "jacobi");
    }

    #[test]
    fn structure_table_witt() {
        let t = LieFamily::witt()
            .structure_table(&w(0, 2), &CheckMode::Symbolic)
            .unwrap();
        assert_eq!(t.rows.len(), 3);
        let coeffs: Vec<String> = t
            .rows
            .iter()
            .map(|r| r.terms[0].coeff.to_string())
            .collect();
        assert_eq!(coeffs, vec!["1", "2", "1"]);
        assert_eq!(t.rows[0].terms[0].generator, "V_1");
    }

    #[test]
    fn structure_table_current_row() {
        let f = LieFamily::genus1_current(FiniteLieAlgebra::sl2());
        let t = f.structure_table(&w(1, 1), &CheckMode::Symbolic).unwrap();
        // only e*A_1, f*A_1 and h*A_1 pairs; find (e,f)
        let row = t
            .rows
            .iter()
            .find(|r| r.x == "e*A_1" && r.y == "f*A_1")
            .expect("row present");
        assert_eq!(row.terms.len(), 3);
        assert!(row.terms.iter().any(|t| t.generator == "h*A_2"));
    }

    #[test]
    fn almost_grading_bounds_examples() {
        use crate::liecore::almost_grading_bounds;
        let wdw = w(-10, 10);
        assert_eq!(
            almost_grading_bounds(&LieFamily::genus1_vf_2param(), &wdw),
            (-4, 0)
        );
        assert_eq!(almost_grading_bounds(&LieFamily::witt(), &wdw), (0, 0));
        assert_eq!(
            almost_grading_bounds(&LieFamily::function_algebra(), &wdw),
            (-4, 0)
        );
        // Witt specialization of the genus-one family is graded again.
        let mut origin = BTreeMap::new();
        origin.insert(Param::E1, Rational::zero());
        origin.insert(Param::E2, Rational::zero());
        let at_origin = LieFamily::genus1_vf_2param().specialize_at(&origin).unwrap();
        assert_eq!(almost_grading_bounds(&at_origin, &wdw), (0, 0));
    }
}
