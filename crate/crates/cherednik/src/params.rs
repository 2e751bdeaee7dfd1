//! Exact rational linear forms in the reflection parameters, and the
//! congruence / positivity conditions that the criteria emit.
//!
//! A [`CongruenceCondition`] asserts that the value of a linear form lies in
//! an arithmetic progression `residue + modulus·ℤ` (or equals `residue` when
//! no modulus is present), optionally bounded below. Condition sets are kept
//! in disjunctive normal form and simplified syntactically only: duplicate
//! removal, clause subsumption and progression containment. No general
//! implication solving is attempted.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Rat, Result};

/// Ordered list of parameter names for one group model.
///
/// Monomial groups use `c` for `r = 1` and `c0, d0, …, d{r-1}` for `r ≥ 2`;
/// two-class tabular groups use `c1, c2`; one-class tabular groups use `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParameterSpace {
    names: Vec<String>,
}

impl ParameterSpace {
    pub fn new<I: IntoIterator<Item = S>, S: Into<String>>(names: I) -> Self {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let distinct: BTreeSet<&String> = names.iter().collect();
        assert_eq!(distinct.len(), names.len(), "parameter names must be distinct");
        ParameterSpace { names }
    }

    /// Space for `G(r,1,n)`: `["c"]` when `r = 1`, else `["c0","d0",…]`.
    pub fn monomial(r: usize) -> Self {
        if r == 1 {
            ParameterSpace::new(["c"])
        } else {
            let mut names = vec!["c0".to_string()];
            names.extend((0..r).map(|j| format!("d{j}")));
            ParameterSpace::new(names)
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn contains(&self, name: &str) -> bool {
        self.names.iter().any(|n| n == name)
    }

    /// A generic assignment: the `i`-th parameter gets `(i+1)/den`. With a
    /// large prime denominator no small-coefficient integer form takes a
    /// nonzero integer value.
    pub fn generic_assignment(&self, denominator: i64) -> Assignment {
        self.names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), Rat::new(i as i64 + 1, denominator)))
            .collect()
    }
}

impl fmt::Display for ParameterSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.names.join(","))
    }
}

pub type Assignment = BTreeMap<String, Rat>;

/// An exact rational linear form `Σ coeff_i · name_i + constant`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct LinearForm {
    coefficients: BTreeMap<String, Rat>,
    constant: Rat,
}

impl LinearForm {
    pub fn zero() -> Self {
        LinearForm::default()
    }

    pub fn constant(value: Rat) -> Self {
        LinearForm { coefficients: BTreeMap::new(), constant: value }
    }

    /// The form `coeff · name`.
    pub fn term(name: &str, coeff: Rat) -> Self {
        let mut f = LinearForm::zero();
        f.add_term(name, coeff);
        f
    }

    pub fn add_term(&mut self, name: &str, coeff: Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coefficients.entry(name.to_string()).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coefficients.remove(name);
        }
    }

    pub fn add_constant(&mut self, value: Rat) {
        self.constant += value;
    }

    pub fn coefficient(&self, name: &str) -> Rat {
        self.coefficients.get(name).copied().unwrap_or_else(Rat::zero)
    }

    pub fn coefficients(&self) -> &BTreeMap<String, Rat> {
        &self.coefficients
    }

    pub fn constant_term(&self) -> Rat {
        self.constant
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty() && self.constant.is_zero()
    }

    pub fn scale(&self, k: Rat) -> LinearForm {
        if k.is_zero() {
            return LinearForm::zero();
        }
        LinearForm {
            coefficients: self.coefficients.iter().map(|(n, c)| (n.clone(), *c * k)).collect(),
            constant: self.constant * k,
        }
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        let mut out = self.clone();
        for (n, c) in &other.coefficients {
            out.add_term(n, *c);
        }
        out.add_constant(other.constant);
        out
    }

    pub fn sub(&self, other: &LinearForm) -> LinearForm {
        self.add(&other.scale(Rat::from_integer(-1)))
    }

    /// Exact value at an assignment. Every name with a nonzero coefficient
    /// must be bound.
    pub fn evaluate(&self, assignment: &Assignment) -> Result<Rat> {
        let mut total = self.constant;
        for (name, coeff) in &self.coefficients {
            let value = assignment
                .get(name)
                .copied()
                .ok_or_else(|| Error::UnboundParameter(name.clone()))?;
            total += *coeff * value;
        }
        Ok(total)
    }

    /// Substitute `name := replacement` (a form), returning the new form.
    pub fn substitute(&self, name: &str, replacement: &LinearForm) -> LinearForm {
        let coeff = self.coefficient(name);
        if coeff.is_zero() {
            return self.clone();
        }
        let mut out = self.clone();
        out.coefficients.remove(name);
        out.add(&replacement.scale(coeff))
    }
}

fn fmt_rat(r: Rat) -> String {
    if r.denom() == &1 {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (name, coeff) in &self.coefficients {
            let mag = coeff.abs();
            let sign = if coeff.is_negative() { "-" } else { "+" };
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{sign}")?;
            }
            if mag == Rat::new(1, 1) {
                write!(f, "{name}")?;
            } else if mag.denom() == &1 {
                write!(f, "{}{name}", mag.numer())?;
            } else {
                write!(f, "({}){name}", fmt_rat(mag))?;
            }
            first = false;
        }
        if !self.constant.is_zero() {
            if self.constant.is_negative() {
                write!(f, "-{}", fmt_rat(self.constant.abs()))?;
            } else {
                write!(f, "+{}", fmt_rat(self.constant))?;
            }
        }
        Ok(())
    }
}

/// Lower bound attached to a congruence condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Bound {
    None,
    NonNegative,
    Positive,
}

impl Bound {
    fn admits(self, v: Rat) -> bool {
        match self {
            Bound::None => true,
            Bound::NonNegative => !v.is_negative(),
            Bound::Positive => v.is_positive(),
        }
    }

    /// `self` is at least as strong as `other`.
    fn implies(self, other: Bound) -> bool {
        matches!(
            (self, other),
            (_, Bound::None)
                | (Bound::Positive, _)
                | (Bound::NonNegative, Bound::NonNegative)
        )
    }
}

/// `form ∈ residue + modulus·ℤ` (modulus `None` means `form = residue`),
/// subject to the lower bound.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CongruenceCondition {
    pub form: LinearForm,
    pub modulus: Option<Rat>,
    pub residue: Rat,
    pub lower_bound: Bound,
}

impl CongruenceCondition {
    pub fn new(form: LinearForm, modulus: Option<Rat>, residue: Rat, lower_bound: Bound) -> Self {
        let residue = match modulus {
            Some(m) => {
                assert!(m.is_positive(), "modulus must be positive");
                reduce_mod(residue, m)
            }
            None => residue,
        };
        CongruenceCondition { form, modulus, residue, lower_bound }
    }

    /// `form ∈ ℤ_{>0}`.
    pub fn positive_integer(form: LinearForm) -> Self {
        CongruenceCondition::new(form, Some(Rat::new(1, 1)), Rat::zero(), Bound::Positive)
    }

    /// `form ∈ residue + modulus·ℤ`, intersected with `ℤ_{≥0}` when the
    /// progression is integral and the caller asks for it via `bound`.
    pub fn progression(form: LinearForm, modulus: Rat, residue: Rat, bound: Bound) -> Self {
        CongruenceCondition::new(form, Some(modulus), residue, bound)
    }

    pub fn check(&self, assignment: &Assignment) -> Result<bool> {
        let v = self.form.evaluate(assignment)?;
        Ok(self.holds_at(v))
    }

    fn holds_at(&self, v: Rat) -> bool {
        if !self.lower_bound.admits(v) {
            return false;
        }
        match self.modulus {
            Some(m) => ((v - self.residue) / m).is_integer(),
            None => v == self.residue,
        }
    }

    /// `self` implies `other` syntactically: same form, contained
    /// progression, at least as strong a bound.
    fn implies(&self, other: &CongruenceCondition) -> bool {
        if self.form != other.form || !self.lower_bound.implies(other.lower_bound) {
            return false;
        }
        match (self.modulus, other.modulus) {
            (_, None) => self.modulus.is_none() && self.residue == other.residue,
            (None, Some(m2)) => ((self.residue - other.residue) / m2).is_integer(),
            (Some(m1), Some(m2)) => {
                (m1 / m2).is_integer() && ((self.residue - other.residue) / m2).is_integer()
            }
        }
    }

    /// Two conditions on the same form whose progressions are disjoint.
    fn contradicts(&self, other: &CongruenceCondition) -> bool {
        if self.form != other.form {
            return false;
        }
        match (self.modulus, other.modulus) {
            (Some(m1), Some(m2)) if m1 == m2 => self.residue != other.residue,
            (None, None) => self.residue != other.residue,
            (Some(m), None) => !((other.residue - self.residue) / m).is_integer(),
            (None, Some(m)) => !((self.residue - other.residue) / m).is_integer(),
            _ => false,
        }
    }
}

fn reduce_mod(residue: Rat, modulus: Rat) -> Rat {
    let q = (residue / modulus).floor();
    residue - q * modulus
}

impl fmt::Display for CongruenceCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ∈ ", self.form)?;
        match self.modulus {
            Some(m) => {
                let zpart = if m == Rat::new(1, 1) {
                    "ℤ".to_string()
                } else if m.denom() == &1 {
                    format!("{}ℤ", m.numer())
                } else {
                    format!("({})ℤ", fmt_rat(m))
                };
                if self.residue.is_zero() {
                    match self.lower_bound {
                        Bound::Positive if m == Rat::new(1, 1) => write!(f, "ℤ_{{>0}}")?,
                        Bound::NonNegative if m == Rat::new(1, 1) => write!(f, "ℤ_{{≥0}}")?,
                        Bound::Positive => write!(f, "{zpart}, >0")?,
                        Bound::NonNegative => write!(f, "{zpart}, ≥0")?,
                        Bound::None => write!(f, "{zpart}")?,
                    }
                } else {
                    write!(f, "{zpart}+{}", fmt_rat(self.residue))?;
                    match self.lower_bound {
                        Bound::Positive => write!(f, ", >0")?,
                        Bound::NonNegative => write!(f, ", ≥0")?,
                        Bound::None => {}
                    }
                }
            }
            None => {
                write!(f, "{{{}}}", fmt_rat(self.residue))?;
                match self.lower_bound {
                    Bound::Positive => write!(f, ", >0")?,
                    Bound::NonNegative => write!(f, ", ≥0")?,
                    Bound::None => {}
                }
            }
        }
        Ok(())
    }
}

/// A conjunction of congruence conditions.
pub type Clause = BTreeSet<CongruenceCondition>;

/// Disjunctive normal form over congruence conditions. An empty clause list
/// is unsatisfiable; a clause with no conditions is always true.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionSet {
    pub space: ParameterSpace,
    pub clauses: Vec<Clause>,
}

impl ConditionSet {
    pub fn unsat(space: ParameterSpace) -> Self {
        ConditionSet { space, clauses: Vec::new() }
    }

    pub fn always(space: ParameterSpace) -> Self {
        ConditionSet { space, clauses: vec![Clause::new()] }
    }

    pub fn single(space: ParameterSpace, cond: CongruenceCondition) -> Self {
        ConditionSet { space, clauses: vec![[cond].into_iter().collect()] }
    }

    pub fn from_clauses(space: ParameterSpace, clauses: Vec<Clause>) -> Self {
        let mut set = ConditionSet { space, clauses };
        set.simplify();
        set
    }

    pub fn is_unsat(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn is_always(&self) -> bool {
        self.clauses.iter().any(|c| c.is_empty())
    }

    pub fn check(&self, assignment: &Assignment) -> Result<bool> {
        for clause in &self.clauses {
            let mut all = true;
            for cond in clause {
                if !cond.check(assignment)? {
                    all = false;
                    break;
                }
            }
            if all {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Logical conjunction in DNF (clause cross product, then simplify).
    pub fn and(&self, other: &ConditionSet) -> Result<ConditionSet> {
        self.compatible(other)?;
        let mut clauses = Vec::new();
        for a in &self.clauses {
            for b in &other.clauses {
                let mut c = a.clone();
                c.extend(b.iter().cloned());
                clauses.push(c);
            }
        }
        Ok(ConditionSet::from_clauses(self.space.clone(), clauses))
    }

    /// Logical disjunction in DNF.
    pub fn or(&self, other: &ConditionSet) -> Result<ConditionSet> {
        self.compatible(other)?;
        let mut clauses = self.clauses.clone();
        clauses.extend(other.clauses.iter().cloned());
        Ok(ConditionSet::from_clauses(self.space.clone(), clauses))
    }

    fn compatible(&self, other: &ConditionSet) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch(self.space.to_string(), other.space.to_string()));
        }
        Ok(())
    }

    /// Syntactic simplification: drop internally contradictory clauses, drop
    /// conditions implied by a stronger one in the same clause, remove
    /// subsumed clauses, and merge single-condition clauses over the same
    /// form whose progressions union to a coarser progression.
    pub fn simplify(&mut self) {
        // Within each clause: contradiction scan and implication pruning.
        let mut kept: Vec<Clause> = Vec::new();
        'clauses: for clause in &self.clauses {
            let conds: Vec<&CongruenceCondition> = clause.iter().collect();
            for i in 0..conds.len() {
                for j in (i + 1)..conds.len() {
                    if conds[i].contradicts(conds[j]) {
                        continue 'clauses;
                    }
                }
            }
            let mut pruned = Clause::new();
            for (i, c) in conds.iter().enumerate() {
                let redundant = conds.iter().enumerate().any(|(j, d)| {
                    j != i && d.implies(c) && !(c.implies(d) && j > i)
                });
                if !redundant {
                    pruned.insert((*c).clone());
                }
            }
            kept.push(pruned);
        }
        kept.sort();
        kept.dedup();

        // Clause subsumption: drop B when some other clause A implies it,
        // i.e. every condition of A... (we need: B ⟹ A to drop B; B implies A
        // when every condition in A is implied by some condition in B).
        let mut keep_flags = vec![true; kept.len()];
        for i in 0..kept.len() {
            if !keep_flags[i] {
                continue;
            }
            for j in 0..kept.len() {
                if i == j || !keep_flags[j] {
                    continue;
                }
                let a = &kept[i];
                let b = &kept[j];
                let b_implies_a = a.iter().all(|ca| b.iter().any(|cb| cb.implies(ca)));
                if b_implies_a && (a != b || i < j) {
                    keep_flags[j] = false;
                }
            }
        }
        let mut clauses: Vec<Clause> =
            kept.into_iter().zip(keep_flags).filter_map(|(c, k)| k.then_some(c)).collect();

        // Merge singleton clauses over the same form: residues s and s+m/2
        // modulo m union to the progression with modulus m/2.
        loop {
            let mut merged = false;
            'outer: for i in 0..clauses.len() {
                for j in (i + 1)..clauses.len() {
                    if clauses[i].len() != 1 || clauses[j].len() != 1 {
                        continue;
                    }
                    let a = clauses[i].iter().next().unwrap().clone();
                    let b = clauses[j].iter().next().unwrap().clone();
                    if a.form != b.form || a.lower_bound != b.lower_bound {
                        continue;
                    }
                    let (Some(ma), Some(mb)) = (a.modulus, b.modulus) else { continue };
                    if ma != mb {
                        continue;
                    }
                    let half = ma / Rat::new(2, 1);
                    let diff = a.residue - b.residue;
                    if diff.abs() == half {
                        let merged_cond = CongruenceCondition::new(
                            a.form.clone(),
                            Some(half),
                            a.residue,
                            a.lower_bound,
                        );
                        clauses.remove(j);
                        clauses.remove(i);
                        clauses.push([merged_cond].into_iter().collect());
                        clauses.sort();
                        merged = true;
                        break 'outer;
                    }
                }
            }
            if !merged {
                break;
            }
        }
        clauses.sort();
        clauses.dedup();
        self.clauses = clauses;
    }
}

impl fmt::Display for ConditionSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unsat() {
            return write!(f, "UNSAT");
        }
        if self.is_always() {
            return write!(f, "TRUE");
        }
        let clause_strs: Vec<String> = self
            .clauses
            .iter()
            .map(|clause| {
                let parts: Vec<String> = clause.iter().map(|c| c.to_string()).collect();
                if parts.len() == 1 {
                    parts.into_iter().next().unwrap()
                } else {
                    format!("({})", parts.join(" and "))
                }
            })
            .collect();
        write!(f, "{}", clause_strs.join(" or "))
    }
}

/// Sign of a linear form over a parameter region.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormSign {
    Zero,
    Positive,
    Negative,
    Mixed,
}

/// Anything that can report the sign of a linear form over a region of
/// parameter space (an open sector, a ray, or the positive half-line).
pub trait SignOracle {
    fn sign_of(&self, form: &LinearForm) -> FormSign;
}

/// The half-line `param > 0` for one-parameter groups.
pub struct PositiveHalfLine {
    pub name: String,
}

impl SignOracle for PositiveHalfLine {
    fn sign_of(&self, form: &LinearForm) -> FormSign {
        debug_assert!(form.constant_term().is_zero());
        let c = form.coefficient(&self.name);
        if c.is_zero() {
            FormSign::Zero
        } else if c.is_positive() {
            FormSign::Positive
        } else {
            FormSign::Negative
        }
    }
}

/// Parse an exact fraction such as `3/4`, `-1/2` or `7`. Decimal input is
/// rejected so nothing is silently rounded.
pub fn parse_fraction(s: &str) -> Result<Rat> {
    let t = s.trim();
    if t.contains('.') {
        return Err(Error::BadFraction(s.to_string()));
    }
    match t.split_once('/') {
        Some((num, den)) => {
            let n: i64 = num.trim().parse().map_err(|_| Error::BadFraction(s.to_string()))?;
            let d: i64 = den.trim().parse().map_err(|_| Error::BadFraction(s.to_string()))?;
            if d == 0 {
                return Err(Error::BadFraction(s.to_string()));
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: i64 = t.parse().map_err(|_| Error::BadFraction(s.to_string()))?;
            Ok(Rat::from_integer(n))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    fn space_c() -> ParameterSpace {
        ParameterSpace::new(["c"])
    }

    fn space_b2() -> ParameterSpace {
        ParameterSpace::new(["c1", "c2"])
    }

    fn assign(pairs: &[(&str, Rat)]) -> Assignment {
        pairs.iter().map(|(n, v)| (n.to_string(), *v)).collect()
    }

    #[test]
    fn evaluate_examples() {
        // 10·c at c = 3/10 → 3
        let f = LinearForm::term("c", rat(10, 1));
        assert_eq!(f.evaluate(&assign(&[("c", rat(3, 10))])).unwrap(), rat(3, 1));
        // 4c1 + 4c2 at (1/4, 1/4) → 2
        let mut g = LinearForm::term("c1", rat(4, 1));
        g.add_term("c2", rat(4, 1));
        assert_eq!(
            g.evaluate(&assign(&[("c1", rat(1, 4)), ("c2", rat(1, 4))])).unwrap(),
            rat(2, 1)
        );
        // zero form evaluates to 0 anywhere
        assert_eq!(LinearForm::zero().evaluate(&assign(&[("c", rat(7, 3))])).unwrap(), rat(0, 1));
    }

    #[test]
    fn evaluate_unbound() {
        let f = LinearForm::term("d0", rat(1, 1));
        assert!(matches!(f.evaluate(&assign(&[("c", rat(1, 2))])), Err(Error::UnboundParameter(_))));
    }

    #[test]
    fn check_examples() {
        // "10c ∈ 1+2ℤ, >0" at c = 3/10 → true (value 3)
        let cond = CongruenceCondition::progression(
            LinearForm::term("c", rat(10, 1)),
            rat(2, 1),
            rat(1, 1),
            Bound::Positive,
        );
        assert!(cond.check(&assign(&[("c", rat(3, 10))])).unwrap());
        // "c ∈ ℤ, >0" at c = 1/2 → false
        let cond = CongruenceCondition::positive_integer(LinearForm::term("c", rat(1, 1)));
        assert!(!cond.check(&assign(&[("c", rat(1, 2))])).unwrap());
        // "nc ∈ ℤ_{>0}" with n = 4 at c = 1/4 → true
        let cond = CongruenceCondition::positive_integer(LinearForm::term("c", rat(4, 1)));
        assert!(cond.check(&assign(&[("c", rat(1, 4))])).unwrap());
    }

    #[test]
    fn residue_normalization() {
        // s and s+m define the same progression
        let a = CongruenceCondition::progression(
            LinearForm::term("c", rat(1, 1)),
            rat(2, 1),
            rat(5, 1),
            Bound::None,
        );
        let b = CongruenceCondition::progression(
            LinearForm::term("c", rat(1, 1)),
            rat(2, 1),
            rat(1, 1),
            Bound::None,
        );
        assert_eq!(a, b);
    }

    #[test]
    fn dnf_identities() {
        let space = space_b2();
        let mut f = LinearForm::term("c1", rat(-1, 1));
        f.add_term("c2", rat(1, 1));
        let half_int = CongruenceCondition::progression(f, rat(1, 1), rat(1, 2), Bound::None);
        let x = ConditionSet::single(space.clone(), half_int.clone());

        // X and TRUE → X
        let t = ConditionSet::always(space.clone());
        assert_eq!(x.and(&t).unwrap(), x);
        // X or UNSAT → X
        let u = ConditionSet::unsat(space.clone());
        assert_eq!(x.or(&u).unwrap(), x);

        // ("−c1+c2 ∈ ℤ+1/2") and ("−c1+c2 ∈ ℤ+1/2 or c2 ∈ ½ℤ") → first condition
        let c2_half = CongruenceCondition::progression(
            LinearForm::term("c2", rat(1, 1)),
            rat(1, 2),
            rat(0, 1),
            Bound::None,
        );
        let y = x.or(&ConditionSet::single(space.clone(), c2_half)).unwrap();
        assert_eq!(x.and(&y).unwrap(), x);
    }

    #[test]
    fn dnf_space_mismatch() {
        let x = ConditionSet::always(space_c());
        let y = ConditionSet::always(space_b2());
        assert!(matches!(x.and(&y), Err(Error::SpaceMismatch(..))));
    }

    #[test]
    fn residue_union_merges() {
        // 4c1 ∈ 2ℤ or 4c1 ∈ 2ℤ+1 → 4c1 ∈ ℤ
        let form = LinearForm::term("c1", rat(4, 1));
        let even =
            CongruenceCondition::progression(form.clone(), rat(2, 1), rat(0, 1), Bound::Positive);
        let odd =
            CongruenceCondition::progression(form.clone(), rat(2, 1), rat(1, 1), Bound::Positive);
        let merged = ConditionSet::single(space_b2(), even)
            .or(&ConditionSet::single(space_b2(), odd))
            .unwrap();
        let expected = ConditionSet::single(
            space_b2(),
            CongruenceCondition::positive_integer(form),
        );
        assert_eq!(merged, expected);
    }

    #[test]
    fn contradictory_clause_dropped() {
        let form = LinearForm::term("c", rat(1, 1));
        let a = CongruenceCondition::progression(form.clone(), rat(2, 1), rat(0, 1), Bound::None);
        let b = CongruenceCondition::progression(form, rat(2, 1), rat(1, 1), Bound::None);
        let set = ConditionSet::from_clauses(space_c(), vec![[a, b].into_iter().collect()]);
        assert!(set.is_unsat());
    }

    #[test]
    fn parse_fraction_rejects_decimals() {
        assert!(parse_fraction("0.25").is_err());
        assert_eq!(parse_fraction("1/4").unwrap(), rat(1, 4));
        assert_eq!(parse_fraction("-3").unwrap(), rat(-3, 1));
        assert!(parse_fraction("1/0").is_err());
    }

    #[test]
    fn display_forms() {
        let mut f = LinearForm::term("c1", rat(1, 1));
        f.add_term("c2", rat(1, 1));
        let cond = CongruenceCondition::progression(f, rat(1, 1), rat(1, 2), Bound::None);
        assert_eq!(cond.to_string(), "c1+c2 ∈ ℤ+1/2");
        let cond = CongruenceCondition::positive_integer(LinearForm::term("c", rat(4, 1)));
        assert_eq!(cond.to_string(), "4c ∈ ℤ_{>0}");
    }
}
