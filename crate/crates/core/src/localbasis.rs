//! Standard bases of ideals in the local ring at the origin.
//!
//! Completion is Buchberger-style with Mora's ecart-driven normal form, so
//! every step is valid in the localization even though only polynomial
//! arithmetic is performed. Once the lead ideal contains a power of the
//! maximal ideal `m^D`, the ideal itself contains `m^D` locally and every
//! computation is truncated in degree `D` (the "highest corner" bound).

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::{cmp_local, Monomial, Polynomial, Rational, Vars};

/// Default cap on the total degree of lead monomials during completion.
pub const DEFAULT_DEGREE_CAP: u32 = 64;

/// Environment variable overriding [`DEFAULT_DEGREE_CAP`].
pub const DEGREE_CAP_ENV: &str = "FLAGSIG_DEGREE_CAP";

/// Degree cap from the environment, falling back to the default.
pub fn degree_cap_from_env() -> u32 {
    std::env::var(DEGREE_CAP_ENV)
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_DEGREE_CAP)
}

/// Negative degree reverse lexicographic ordering on a fixed variable list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalOrdering {
    vars: Vars,
}

impl LocalOrdering {
    pub fn new(vars: &Vars) -> Self {
        LocalOrdering { vars: vars.clone() }
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn name(&self) -> &'static str {
        "ds (negative degree reverse lexicographic)"
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        cmp_local(a, b)
    }
}

/// Polynomial with terms sorted ascending in the local order; the lead term
/// is the last one.
#[derive(Clone, Debug, PartialEq)]
struct LocalPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl LocalPoly {
    fn from_poly(p: &Polynomial) -> Self {
        let mut terms: Vec<_> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| cmp_local(&a.0, &b.0));
        LocalPoly { terms }
    }

    fn to_poly(&self, vars: &Vars) -> Polynomial {
        Polynomial::from_terms(vars, self.terms.iter().cloned())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &(Monomial, Rational) {
        self.terms.last().expect("lead of zero polynomial")
    }

    fn lead_monomial(&self) -> &Monomial {
        &self.lead().0
    }

    fn max_degree(&self) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree())
            .max()
            .unwrap_or(0)
    }

    fn ecart(&self) -> u32 {
        self.max_degree() - self.lead_monomial().degree()
    }

    fn truncate(&mut self, bound: Option<u32>) {
        if let Some(b) = bound {
            self.terms.retain(|(m, _)| m.degree() < b);
        }
    }

    /// Truncation for basis elements: an element lying entirely in `m^b`
    /// is replaced by its lead monomial, which then belongs to the ideal.
    fn truncate_keeping_lead(&mut self, bound: Option<u32>) {
        if self.is_zero() {
            return;
        }
        let lead = self.lead_monomial().clone();
        self.truncate(bound);
        if self.is_zero() {
            self.terms.push((lead, Rational::one()));
        }
    }

    fn make_monic(&mut self) {
        let inv = self.lead().1.recip();
        if !inv.is_one() {
            for (_, c) in &mut self.terms {
                *c *= &inv;
            }
        }
    }

    /// `self - c * t * g`, merging two sorted term lists.
    fn sub_scaled(&self, g: &LocalPoly, c: &Rational, t: &Monomial) -> LocalPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(m, k)| (m.mul(t), -(k * c))).peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (Some(x), Some(y)) => cmp_local(&x.0, &y.0),
            };
            match ord {
                Ordering::Less => out.push(a.next().expect("peeked").clone()),
                Ordering::Greater => out.push(b.next().expect("peeked")),
                Ordering::Equal => {
                    let (m, x) = a.next().expect("peeked");
                    let (_, y) = b.next().expect("peeked");
                    let s = x + y;
                    if !s.is_zero() {
                        out.push((m.clone(), s));
                    }
                }
            }
        }
        LocalPoly { terms: out }
    }

    /// Cancels the lead term of `self` against `g`, whose lead monomial must
    /// divide it.
    fn reduce_by(&self, g: &LocalPoly) -> LocalPoly {
        let (lm, lc) = self.lead();
        let (gm, gc) = g.lead();
        let t = gm.quotient_of(lm).expect("reducer lead must divide");
        self.sub_scaled(g, &(lc / gc), &t)
    }
}

fn s_poly(f: &LocalPoly, g: &LocalPoly) -> LocalPoly {
    let (fm, fc) = f.lead();
    let (gm, gc) = g.lead();
    let l = fm.lcm(gm);
    let tf = fm.quotient_of(&l).expect("lcm");
    let tg = gm.quotient_of(&l).expect("lcm");
    let scaled_f = LocalPoly::default_zero().sub_scaled(f, &(-fc.recip()), &tf);
    scaled_f.sub_scaled(g, &gc.recip(), &tg)
}

impl LocalPoly {
    fn default_zero() -> Self {
        LocalPoly { terms: Vec::new() }
    }
}

/// Mora's weak normal form: the result `h` satisfies `u * p - h in I` for a
/// unit `u`, and either `h = 0` or its lead monomial lies outside the lead
/// ideal of `basis`.
fn mora_normal_form(p: LocalPoly, basis: &[LocalPoly], bound: Option<u32>) -> LocalPoly {
    let mut h = p;
    h.truncate(bound);
    let mut extra: Vec<LocalPoly> = Vec::new();
    while !h.is_zero() {
        let lm = h.lead_monomial().clone();
        let pick = basis
            .iter()
            .chain(extra.iter())
            .filter(|g| g.lead_monomial().divides(&lm))
            .min_by_key(|g| g.ecart())
            .cloned();
        let Some(g) = pick else {
            return h;
        };
        if g.ecart() > h.ecart() {
            extra.push(h.clone());
        }
        h = h.reduce_by(&g);
        h.truncate(bound);
    }
    h
}

/// Standard monomials of a monomial ideal, if finitely many; sorted from the
/// largest (the monomial `1`) downwards in the local order.
fn staircase(leads: &[Monomial], nvars: usize) -> Option<Vec<Monomial>> {
    let mut caps = vec![None; nvars];
    for m in leads {
        if m.is_one() {
            return Some(Vec::new());
        }
        if let Some((i, e)) = m.pure_power() {
            caps[i] = Some(caps[i].map_or(e, |c: u32| c.min(e)));
        }
    }
    let caps: Vec<u32> = caps.into_iter().collect::<Option<_>>()?;
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial::new(exps.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer over the box [0, cap_i)
        let mut i = 0;
        loop {
            if i == nvars {
                out.sort_by(|a, b| cmp_local(b, a));
                return Some(out);
            }
            exps[i] += 1;
            if exps[i] < caps[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

fn highcorner_bound(leads: &[Monomial], nvars: usize) -> Option<u32> {
    staircase(leads, nvars).map(|s| s.iter().map(Monomial::degree).max().map_or(0, |d| d + 1))
}

/// A standard basis of an ideal in the local ring at the origin.
#[derive(Clone, Debug)]
pub struct StandardBasis {
    ordering: LocalOrdering,
    elements: Vec<LocalPoly>,
    generators: Vec<Polynomial>,
    lead_monomials: Vec<Monomial>,
    bound: Option<u32>,
}

impl StandardBasis {
    pub fn ordering(&self) -> &LocalOrdering {
        &self.ordering
    }

    pub fn vars(&self) -> &Vars {
        self.ordering.vars()
    }

    /// Basis elements (monic, truncated at the highest-corner bound).
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn lead_monomials(&self) -> &[Monomial] {
        &self.lead_monomials
    }

    /// `D` such that `m^D` lies in the ideal, once the quotient is known to
    /// be finite dimensional.
    pub fn degree_bound(&self) -> Option<u32> {
        self.bound
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.lead_monomials.iter().any(Monomial::is_one)
    }
}

/// Computes a standard basis with the degree cap taken from the environment.
pub fn standard_basis(gens: &[Polynomial], ord: &LocalOrdering) -> Result<StandardBasis> {
    standard_basis_with_cap(gens, ord, degree_cap_from_env())
}

pub fn standard_basis_with_cap(
    gens: &[Polynomial],
    ord: &LocalOrdering,
    degree_cap: u32,
) -> Result<StandardBasis> {
    let vars = ord.vars().clone();
    let nvars = vars.len();
    if gens.iter().any(|g| g.vars() != &vars) {
        return Err(Error::RingMismatch);
    }
    let mut basis: Vec<LocalPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut p = LocalPoly::from_poly(g);
            p.make_monic();
            p
        })
        .collect();
    if basis.is_empty() {
        return Err(Error::Malformed(
            "standard basis needs a nonzero generator".into(),
        ));
    }

    let leads = |b: &[LocalPoly]| {
        b.iter()
            .map(|g| g.lead_monomial().clone())
            .collect::<Vec<_>>()
    };
    let mut bound = highcorner_bound(&leads(&basis), nvars);
    for g in &mut basis {
        g.truncate_keeping_lead(bound);
    }

    let mut pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|j| (0..j).map(move |i| (i, j)))
        .collect();

    while !basis.iter().any(|g| g.lead_monomial().is_one()) && !pairs.is_empty() {
        // normal strategy: the pair whose lcm is largest in the local order
        let (k, _) = pairs
            .iter()
            .enumerate()
            .max_by(|(ka, a), (kb, b)| {
                let la = basis[a.0].lead_monomial().lcm(basis[a.1].lead_monomial());
                let lb = basis[b.0].lead_monomial().lcm(basis[b.1].lead_monomial());
                cmp_local(&la, &lb).then_with(|| kb.cmp(ka))
            })
            .expect("nonempty");
        let (i, j) = pairs.remove(k);
        let s = s_poly(&basis[i], &basis[j]);
        let mut h = mora_normal_form(s, &basis, bound);
        if h.is_zero() {
            continue;
        }
        if h.lead_monomial().degree() > degree_cap {
            return Err(Error::DegreeCapExceeded { cap: degree_cap });
        }
        h.make_monic();
        let new = basis.len();
        basis.push(h);
        pairs.extend((0..new).map(|i| (i, new)));
        if let Some(b) = highcorner_bound(&leads(&basis), nvars) {
            if bound.is_none_or(|old| b < old) {
                bound = Some(b);
                for g in &mut basis {
                    g.truncate_keeping_lead(bound);
                }
            }
        }
    }

    // minimal basis: drop elements whose lead is divisible by another lead
    let all_leads = leads(&basis);
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !(0..basis.len()).any(|j| {
                j != i
                    && all_leads[j].divides(&all_leads[i])
                    && (all_leads[j] != all_leads[i] || j < i)
            })
        })
        .collect();
    let elements: Vec<LocalPoly> = basis
        .into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect();
    let lead_monomials = leads(&elements);
    let bound = highcorner_bound(&lead_monomials, nvars);
    let generators = elements.iter().map(|g| g.to_poly(&vars)).collect();
    Ok(StandardBasis {
        ordering: ord.clone(),
        elements,
        generators,
        lead_monomials,
        bound,
    })
}

/// Fully reduced normal form: the unique polynomial supported on standard
/// monomials that is congruent to `p` modulo the ideal in the local ring.
///
/// Requires the quotient to be finite dimensional (or the ideal to be the
/// unit ideal, in which case every normal form is zero).
pub fn normal_form(p: &Polynomial, sb: &StandardBasis) -> Result<Polynomial> {
    if p.vars() != sb.vars() {
        return Err(Error::RingMismatch);
    }
    let bound = sb.bound.ok_or_else(|| {
        Error::InfiniteCodimension("normal forms need a finite-dimensional quotient".into())
    })?;
    let mut h = LocalPoly::from_poly(p);
    h.truncate(Some(bound));
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while !h.is_zero() {
        let lm = h.lead_monomial();
        // every reduction strictly lowers the lead among the finitely many
        // monomials of degree < bound, so this terminates
        match sb.elements.iter().find(|g| g.lead_monomial().divides(lm)) {
            Some(g) => {
                h = h.reduce_by(g);
                h.truncate(Some(bound));
            }
            None => rem.push(h.terms.pop().expect("nonzero")),
        }
    }
    Ok(Polynomial::from_terms(sb.vars(), rem))
}

/// Monomial basis of the local quotient algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientBasis {
    vars: Vars,
    monomials: Vec<Monomial>,
}

impl QuotientBasis {
    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    /// Standard monomials, largest first (so `1` comes first).
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn dimension(&self) -> usize {
        self.monomials.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.monomials.iter().position(|x| x == m)
    }

    pub fn monomial_polys(&self) -> Vec<Polynomial> {
        self.monomials
            .iter()
            .map(|m| Polynomial::monomial(&self.vars, m.clone(), Rational::one()))
            .collect()
    }
}

/// Standard monomials of the lead ideal. Finite exactly when every variable
/// has a pure power among the lead monomials.
pub fn quotient_basis(sb: &StandardBasis) -> Result<QuotientBasis> {
    if sb.is_unit_ideal() {
        return Err(Error::UnitIdeal);
    }
    let nvars = sb.vars().len();
    match staircase(&sb.lead_monomials, nvars) {
        Some(monomials) => Ok(QuotientBasis {
            vars: sb.vars().clone(),
            monomials,
        }),
        None => {
            let missing: Vec<&str> = (0..nvars)
                .filter(|&i| {
                    !sb.lead_monomials
                        .iter()
                        .any(|m| m.pure_power().is_some_and(|(j, _)| j == i))
                })
                .map(|i| sb.vars()[i].as_str())
                .collect();
            Err(Error::InfiniteCodimension(format!(
                "no pure power of {} among the lead monomials",
                missing.join(", ")
            )))
        }
    }
}
