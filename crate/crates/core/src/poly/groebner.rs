//! Buchberger's algorithm over the rationals.
//!
//! Polynomials are converted once into an order-specific form whose terms
//! carry their precomputed order key, so comparisons during reduction are
//! plain slice comparisons. Pair selection is the normal strategy (least
//! lcm degree first) and pairs are pruned with the Gebauer–Möller
//! installation of both Buchberger criteria.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::order::CompiledOrder;
use super::{Monomial, Polynomial, Rational, TermOrder};
use crate::error::{duration_ms, BudgetStats, Error, Result};

/// Caps for a single Gröbner computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GbBudget {
    pub max_pairs: usize,
    pub max_degree: u32,
    #[serde(with = "opt_duration_ms")]
    pub max_time: Option<Duration>,
}

mod opt_duration_ms {
    use serde::Serializer;
    use std::time::Duration;

    pub fn serialize<S: Serializer>(d: &Option<Duration>, s: S) -> Result<S::Ok, S::Error> {
        match d {
            Some(d) => s.serialize_some(&(d.as_millis() as u64)),
            None => s.serialize_none(),
        }
    }
}

impl Default for GbBudget {
    fn default() -> Self {
        Self {
            max_pairs: 200_000,
            max_degree: 40,
            max_time: Some(Duration::from_secs(300)),
        }
    }
}

impl GbBudget {
    pub fn unlimited() -> Self {
        Self {
            max_pairs: usize::MAX,
            max_degree: u32::MAX,
            max_time: None,
        }
    }

    /// Multiplies every cap by `factor`.
    pub fn scaled(&self, factor: u32) -> Self {
        Self {
            max_pairs: self.max_pairs.saturating_mul(factor as usize),
            max_degree: self.max_degree.saturating_mul(factor),
            max_time: self.max_time.map(|t| t * factor),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GbStats {
    pub pairs_processed: usize,
    pub zero_reductions: usize,
    pub max_degree: u32,
    pub basis_size: usize,
    #[serde(with = "duration_ms")]
    pub elapsed: Duration,
}

#[derive(Clone)]
struct Term {
    key: Box<[i64]>,
    mono: Monomial,
    coef: Rational,
}

/// Terms in ascending order; the leading term is last.
#[derive(Clone, Default)]
struct Sorted {
    terms: Vec<Term>,
}

struct Lead {
    mono: Monomial,
    mask: u64,
}

fn mask_of(m: &Monomial) -> u64 {
    m.exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .fold(0, |acc, (v, _)| acc | 1 << (v % 64))
}

fn add_keys(a: &[i64], b: &[i64]) -> Box<[i64]> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

impl Sorted {
    fn from_poly(p: &Polynomial, ord: &CompiledOrder) -> Self {
        let mut terms: Vec<Term> = p
            .terms()
            .map(|(m, c)| Term {
                key: ord.key(m),
                mono: m.clone(),
                coef: c.clone(),
            })
            .collect();
        terms.sort_by(|a, b| a.key.cmp(&b.key));
        Self { terms }
    }

    fn to_poly(&self, nvars: usize) -> Polynomial {
        Polynomial::from_terms(nvars, self.terms.iter().map(|t| (t.mono.clone(), t.coef.clone())))
    }

    fn lead(&self) -> Option<&Term> {
        self.terms.last()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self) {
        if let Some(lc) = self.lead().map(|t| t.coef.clone()) {
            if !lc.is_one() {
                let inv = Rational::one() / lc;
                for t in &mut self.terms {
                    t.coef *= &inv;
                }
            }
        }
    }

    fn lead_info(&self) -> Lead {
        let t = self.lead().expect("nonzero polynomial");
        Lead {
            mono: t.mono.clone(),
            mask: mask_of(&t.mono),
        }
    }

    fn degree(&self) -> u32 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }
}

/// `a − c·x^m·b` where `a` and `b` are ascending term lists.
fn sub_scaled(a: &[Term], c: &Rational, m: &Monomial, mkey: &[i64], b: &[Term]) -> Vec<Term> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut i = 0;
    let mut shifted = b.iter().map(|t| Term {
        key: add_keys(&t.key, mkey),
        mono: t.mono.mul(m),
        coef: -(&t.coef * c),
    });
    let mut next = shifted.next();
    while let Some(tb) = next.take() {
        while i < a.len() && a[i].key < tb.key {
            out.push(a[i].clone());
            i += 1;
        }
        if i < a.len() && a[i].key == tb.key {
            let coef = &a[i].coef + &tb.coef;
            if !coef.is_zero() {
                out.push(Term { coef, ..tb });
            }
            i += 1;
        } else {
            out.push(tb);
        }
        next = shifted.next();
    }
    out.extend_from_slice(&a[i..]);
    out
}

struct Reducer<'a> {
    polys: &'a [Sorted],
    leads: &'a [Lead],
    active: &'a [usize],
    deadline: Option<Instant>,
}

impl Reducer<'_> {
    fn find_divisor(&self, t: &Term) -> Option<usize> {
        let tm = mask_of(&t.mono);
        self.active.iter().copied().find(|&k| {
            let l = &self.leads[k];
            l.mask & !tm == 0 && l.mono.divides(&t.mono)
        })
    }

    /// Full normal form. Errors only when the deadline passes.
    fn reduce(&self, mut p: Vec<Term>) -> std::result::Result<Sorted, ()> {
        let mut rem: Vec<Term> = Vec::new();
        let mut steps = 0u32;
        while let Some(t) = p.pop() {
            match self.find_divisor(&t) {
                Some(k) => {
                    let g = &self.polys[k].terms;
                    let glead = &g[g.len() - 1];
                    let m = t.mono.div(&glead.mono);
                    let mkey: Box<[i64]> =
                        t.key.iter().zip(glead.key.iter()).map(|(a, b)| a - b).collect();
                    let c = &t.coef / &glead.coef;
                    p = sub_scaled(&p, &c, &m, &mkey, &g[..g.len() - 1]);
                    steps += 1;
                    if steps % 64 == 0 {
                        if let Some(d) = self.deadline {
                            if Instant::now() > d {
                                return Err(());
                            }
                        }
                    }
                }
                None => rem.push(t),
            }
        }
        rem.reverse();
        Ok(Sorted { terms: rem })
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    key: Box<[i64]>,
    degree: u32,
}

impl Pair {
    fn selection_cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.key.cmp(&other.key))
            .then_with(|| (self.i, self.j).cmp(&(other.i, other.j)))
    }
}

struct Engine<'a> {
    ord: &'a CompiledOrder,
    polys: Vec<Sorted>,
    leads: Vec<Lead>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
    stats: GbStats,
    budget: &'a GbBudget,
    start: Instant,
}

impl<'a> Engine<'a> {
    fn pair(&self, i: usize, j: usize) -> Pair {
        let lcm = self.leads[i].mono.lcm(&self.leads[j].mono);
        let key = self.ord.key(&lcm);
        let degree = lcm.degree();
        Pair { i, j, lcm, key, degree }
    }

    fn deadline(&self) -> Option<Instant> {
        self.budget.max_time.map(|t| self.start + t)
    }

    fn exhausted(&self, reason: &str) -> Error {
        Error::BudgetExhausted {
            reason: reason.to_string(),
            stats: BudgetStats {
                pairs_processed: self.stats.pairs_processed,
                max_degree: self.stats.max_degree,
                basis_size: self.active.len(),
                elapsed: self.start.elapsed(),
            },
        }
    }

    fn reducer(&self) -> Reducer<'_> {
        Reducer {
            polys: &self.polys,
            leads: &self.leads,
            active: &self.active,
            deadline: self.deadline(),
        }
    }

    /// Gebauer–Möller update for a new basis element `h`.
    fn install(&mut self, mut p: Sorted) -> Result<()> {
        p.make_monic();
        let deg = p.degree();
        self.stats.max_degree = self.stats.max_degree.max(deg);
        if deg > self.budget.max_degree {
            return Err(self.exhausted("degree cap"));
        }
        let h = self.polys.len();
        self.leads.push(p.lead_info());
        self.polys.push(p);
        let lh = self.leads[h].mono.clone();

        let mut cands: Vec<Pair> = self.active.iter().map(|&g| self.pair(g, h)).collect();
        let mut kept: Vec<Pair> = Vec::new();
        while !cands.is_empty() {
            let p1 = cands.remove(0);
            let coprime = lh.coprime(&self.leads[p1.i].mono);
            let dominated = cands
                .iter()
                .chain(kept.iter())
                .any(|p2| p2.lcm.divides(&p1.lcm));
            if coprime || !dominated {
                kept.push(p1);
            }
        }
        kept.retain(|p| !lh.coprime(&self.leads[p.i].mono));

        let leads = &self.leads;
        self.pairs.retain(|p| {
            !(lh.divides(&p.lcm)
                && leads[p.i].mono.lcm(&lh) != p.lcm
                && leads[p.j].mono.lcm(&lh) != p.lcm)
        });
        self.pairs.extend(kept);

        let leads = &self.leads;
        self.active.retain(|&g| !lh.divides(&leads[g].mono));
        self.active.push(h);
        Ok(())
    }

    fn s_poly(&self, pair: &Pair) -> Vec<Term> {
        let f = &self.polys[pair.i].terms;
        let g = &self.polys[pair.j].terms;
        let mf = pair.lcm.div(&self.leads[pair.i].mono);
        let mg = pair.lcm.div(&self.leads[pair.j].mono);
        let kf = self.ord.key(&mf);
        let kg = self.ord.key(&mg);
        let ftail: Vec<Term> = f[..f.len() - 1]
            .iter()
            .map(|t| Term {
                key: add_keys(&t.key, &kf),
                mono: t.mono.mul(&mf),
                coef: t.coef.clone(),
            })
            .collect();
        sub_scaled(&ftail, &Rational::one(), &mg, &kg, &g[..g.len() - 1])
    }

    fn run(&mut self) -> Result<()> {
        while !self.pairs.is_empty() {
            if self.stats.pairs_processed >= self.budget.max_pairs {
                return Err(self.exhausted("pair cap"));
            }
            if self.deadline().is_some_and(|d| Instant::now() > d) {
                return Err(self.exhausted("time cap"));
            }
            let best = (0..self.pairs.len())
                .min_by(|&a, &b| self.pairs[a].selection_cmp(&self.pairs[b]))
                .expect("nonempty");
            let pair = self.pairs.swap_remove(best);
            self.stats.pairs_processed += 1;
            let s = self.s_poly(&pair);
            let r = self
                .reducer()
                .reduce(s)
                .map_err(|_| self.exhausted("time cap"))?;
            if r.is_zero() {
                self.stats.zero_reductions += 1;
            } else {
                self.install(r)?;
            }
        }
        Ok(())
    }

    /// Tail-reduces the active set; returns it sorted by leading term,
    /// largest first.
    fn reduced_basis(&self) -> Result<Vec<Sorted>> {
        let reducer = self.reducer();
        let mut out = Vec::with_capacity(self.active.len());
        for &k in &self.active {
            let terms = &self.polys[k].terms;
            let lead = terms[terms.len() - 1].clone();
            let mut r = reducer
                .reduce(terms[..terms.len() - 1].to_vec())
                .map_err(|_| self.exhausted("time cap"))?;
            r.terms.push(lead);
            out.push(r);
        }
        out.sort_by(|a, b| b.lead().unwrap().key.cmp(&a.lead().unwrap().key));
        Ok(out)
    }
}

/// A reduced Gröbner basis together with the order it was computed for.
#[derive(Clone)]
pub struct GroebnerBasis {
    order: TermOrder,
    compiled: CompiledOrder,
    nvars: usize,
    sorted: Vec<Sorted>,
    polys: Vec<Polynomial>,
    pub stats: GbStats,
}

impl std::fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("GroebnerBasis")
            .field("order", &self.order)
            .field("polys", &self.polys)
            .finish()
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.polys == other.polys
    }
}

impl GroebnerBasis {
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn into_polys(self) -> Vec<Polynomial> {
        self.polys
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.sorted.iter().map(|s| s.lead().unwrap().mono.clone()).collect()
    }

    /// Leading terms as polynomials.
    pub fn leading_terms(&self) -> Vec<Polynomial> {
        self.sorted
            .iter()
            .map(|s| {
                let t = s.lead().unwrap();
                Polynomial::from_terms(self.nvars, [(t.mono.clone(), t.coef.clone())])
            })
            .collect()
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let active: Vec<usize> = (0..self.sorted.len()).collect();
        let leads: Vec<Lead> = self.sorted.iter().map(Sorted::lead_info).collect();
        let reducer = Reducer {
            polys: &self.sorted,
            leads: &leads,
            active: &active,
            deadline: None,
        };
        let f = Sorted::from_poly(f, &self.compiled);
        reducer
            .reduce(f.terms)
            .expect("no deadline")
            .to_poly(self.nvars)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], ord: &TermOrder, budget: &GbBudget) -> Result<GroebnerBasis> {
    let nvars = gens.first().map_or(0, Polynomial::nvars);
    if let Some(bad) = gens.iter().find(|g| g.nvars() != nvars) {
        return Err(Error::SizeMismatch(bad.nvars(), nvars));
    }
    let compiled = ord.compile(nvars)?;
    let mut engine = Engine {
        ord: &compiled,
        polys: Vec::new(),
        leads: Vec::new(),
        active: Vec::new(),
        pairs: Vec::new(),
        stats: GbStats::default(),
        budget,
        start: Instant::now(),
    };
    for g in gens {
        let s = Sorted::from_poly(g, &compiled);
        let r = engine
            .reducer()
            .reduce(s.terms)
            .map_err(|_| engine.exhausted("time cap"))?;
        if !r.is_zero() {
            engine.install(r)?;
        }
    }
    engine.run()?;
    let sorted = engine.reduced_basis()?;
    let polys = sorted.iter().map(|s| s.to_poly(nvars)).collect();
    let mut stats = engine.stats.clone();
    stats.basis_size = sorted.len();
    // millisecond resolution, matching the serialized form
    stats.elapsed = Duration::from_millis(engine.start.elapsed().as_millis() as u64);
    Ok(GroebnerBasis {
        order: ord.clone(),
        compiled: compiled.clone(),
        nvars,
        sorted,
        polys,
        stats,
    })
}

/// Multivariate division of `f` by `divisors` (any generating set, not
/// necessarily a Gröbner basis). The remainder has no monomial divisible by
/// a leading monomial of the divisors.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], ord: &TermOrder) -> Result<Polynomial> {
    let nvars = f.nvars();
    let compiled = ord.compile(nvars)?;
    let mut polys: Vec<Sorted> = divisors
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sorted::from_poly(g, &compiled))
        .collect();
    for p in &mut polys {
        p.make_monic();
    }
    let leads: Vec<Lead> = polys.iter().map(Sorted::lead_info).collect();
    let active: Vec<usize> = (0..polys.len()).collect();
    let reducer = Reducer {
        polys: &polys,
        leads: &leads,
        active: &active,
        deadline: None,
    };
    let r = reducer
        .reduce(Sorted::from_poly(f, &compiled).terms)
        .expect("no deadline");
    Ok(r.to_poly(nvars))
}

/// Leading monomial and coefficient of `f` under `ord`.
pub fn leading_term(f: &Polynomial, ord: &TermOrder) -> Result<Option<(Monomial, Rational)>> {
    let compiled = ord.compile(f.nvars())?;
    Ok(f
        .terms()
        .max_by(|a, b| compiled.key(a.0).cmp(&compiled.key(b.0)))
        .map(|(m, c)| (m.clone(), c.clone())))
}

/// `true` iff every S-polynomial of `gens` reduces to zero modulo `gens`,
/// checked for all pairs without any criteria.
pub fn is_groebner_basis(gens: &[Polynomial], ord: &TermOrder) -> Result<bool> {
    let Some(nvars) = gens.first().map(Polynomial::nvars) else {
        return Ok(true);
    };
    let compiled = ord.compile(nvars)?;
    let mut polys: Vec<Sorted> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Sorted::from_poly(g, &compiled))
        .collect();
    for p in &mut polys {
        p.make_monic();
    }
    let leads: Vec<Lead> = polys.iter().map(Sorted::lead_info).collect();
    let active: Vec<usize> = (0..polys.len()).collect();
    let reducer = Reducer {
        polys: &polys,
        leads: &leads,
        active: &active,
        deadline: None,
    };
    for i in 0..polys.len() {
        for j in i + 1..polys.len() {
            let lcm = leads[i].mono.lcm(&leads[j].mono);
            let mf = lcm.div(&leads[i].mono);
            let mg = lcm.div(&leads[j].mono);
            let kf = compiled.key(&mf);
            let kg = compiled.key(&mg);
            let f = &polys[i].terms;
            let g = &polys[j].terms;
            let ftail: Vec<Term> = f[..f.len() - 1]
                .iter()
                .map(|t| Term {
                    key: add_keys(&t.key, &kf),
                    mono: t.mono.mul(&mf),
                    coef: t.coef.clone(),
                })
                .collect();
            let s = sub_scaled(&ftail, &Rational::one(), &mg, &kg, &g[..g.len() - 1]);
            if !reducer.reduce(s).expect("no deadline").is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
