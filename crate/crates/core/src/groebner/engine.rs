//! Buchberger's algorithm over free modules `R^n` with a position-over-term
//! order. Ideals are the rank-one case.
//!
//! Pairs are chosen by the normal strategy (smallest lcm degree first) and
//! filtered with the Gebauer–Möller installation of Buchberger's criteria.
//! In tracing mode every element carries its representation in terms of the
//! input generators, criteria are switched off, and every S-pair that reduces
//! to zero contributes a syzygy of the inputs.

use std::sync::Arc;

use super::module::{axpy_terms, pot_cmp, VTerm};
use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Ring};

pub(crate) type Terms<F> = Vec<VTerm<<F as Field>::Elem>>;

#[inline]
fn divmask(m: &Monomial) -> u64 {
    m.support().fold(0u64, |acc, i| acc | 1 << (i % 64))
}

pub(crate) struct Reducer<F: Field> {
    pub(crate) field: F,
    pub(crate) order: MonomialOrder,
    pub(crate) elems: Vec<ReducerElem<F>>,
}

pub(crate) struct ReducerElem<F: Field> {
    /// Monic.
    pub(crate) terms: Terms<F>,
    pub(crate) trace: Option<Terms<F>>,
    lm: Monomial,
    comp: u32,
    mask: u64,
    active: bool,
}

impl<F: Field> ReducerElem<F> {
    pub(crate) fn new(terms: Terms<F>, trace: Option<Terms<F>>) -> Self {
        let lead = terms.first().expect("reducer elements are nonzero");
        Self {
            lm: lead.mono.clone(),
            comp: lead.comp,
            mask: divmask(&lead.mono),
            terms,
            trace,
            active: true,
        }
    }
}

impl<F: Field> Reducer<F> {
    pub(crate) fn new(field: F, order: MonomialOrder) -> Self {
        Self {
            field,
            order,
            elems: Vec::new(),
        }
    }

    fn find_reducer(&self, t: &VTerm<F::Elem>, skip: Option<usize>) -> Option<usize> {
        let mask = divmask(&t.mono);
        self.elems.iter().enumerate().position(|(k, g)| {
            g.active && Some(k) != skip && g.comp == t.comp && g.mask & !mask == 0 && g.lm.divides(&t.mono)
        })
    }

    /// Full normal form of `p` (and the matching update of `trace`).
    pub(crate) fn reduce(
        &self,
        p: Terms<F>,
        mut trace: Option<Terms<F>>,
        skip: Option<usize>,
    ) -> (Terms<F>, Option<Terms<F>>) {
        let field = &self.field;
        let mut result = Vec::new();
        let mut p = p;
        let mut start = 0;
        while start < p.len() {
            let t = &p[start];
            match self.find_reducer(t, skip) {
                None => {
                    result.push(t.clone());
                    start += 1;
                }
                Some(k) => {
                    let g = &self.elems[k];
                    let m = t.mono.div(&g.lm).expect("reducer divides");
                    let c = field.neg(&t.coeff);
                    p = axpy_terms(field, self.order, &p[start..], &c, &m, &g.terms);
                    start = 0;
                    if let (Some(tr), Some(gtr)) = (trace.as_mut(), g.trace.as_ref()) {
                        *tr = axpy_terms(field, self.order, tr, &c, &m, gtr);
                    }
                }
            }
        }
        (result, trace)
    }

    fn make_monic(&self, terms: Terms<F>, trace: Option<Terms<F>>) -> (Terms<F>, Option<Terms<F>>) {
        let field = &self.field;
        let lc = terms[0].coeff.clone();
        if field.is_one(&lc) {
            return (terms, trace);
        }
        let inv = field.inv(&lc).expect("nonzero");
        let scale = |ts: Terms<F>| -> Terms<F> {
            ts.into_iter()
                .map(|t| VTerm {
                    coeff: field.mul(&t.coeff, &inv),
                    mono: t.mono,
                    comp: t.comp,
                })
                .collect()
        };
        (scale(terms), trace.map(scale))
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Output of [`module_buchberger`].
pub(crate) struct EngineOutput<F: Field> {
    /// Reduced, monic, sorted by increasing leading term.
    pub basis: Vec<Terms<F>>,
    /// Syzygies of the inputs recorded from zero reductions (tracing mode).
    pub syzygies: Vec<Terms<F>>,
}

pub(crate) struct Engine<F: Field> {
    reducer: Reducer<F>,
    nvars: usize,
    ninputs: usize,
    tracing: bool,
    product_criterion: bool,
    pairs: Vec<Pair>,
    syzygies: Vec<Terms<F>>,
}

impl<F: Field> Engine<F> {
    pub(crate) fn new(ring: &Arc<Ring<F>>, rank: usize, ninputs: usize, tracing: bool) -> Self {
        Self {
            reducer: Reducer::new(ring.field().clone(), ring.order()),
            nvars: ring.nvars(),
            ninputs,
            tracing,
            product_criterion: rank == 1 && !tracing,
            pairs: Vec::new(),
            syzygies: Vec::new(),
        }
    }

    fn unit_trace(&self, i: usize) -> Terms<F> {
        vec![VTerm {
            coeff: self.reducer.field.one(),
            mono: Monomial::one(self.nvars),
            comp: i as u32,
        }]
    }

    pub(crate) fn run(mut self, inputs: Vec<Terms<F>>) -> EngineOutput<F> {
        for (i, p) in inputs.into_iter().enumerate() {
            let trace = self.tracing.then(|| self.unit_trace(i));
            if self.tracing {
                if p.is_empty() {
                    self.syzygies.push(trace.unwrap());
                } else {
                    let (p, tr) = self.reducer.make_monic(p, trace);
                    self.insert(p, tr);
                }
            } else {
                let (p, _) = self.reducer.reduce(p, None, None);
                if !p.is_empty() {
                    let (p, _) = self.reducer.make_monic(p, None);
                    self.insert(p, None);
                }
            }
        }
        while let Some(pair) = self.next_pair() {
            let (s, tr) = self.spoly(&pair);
            let (h, tr) = self.reducer.reduce(s, tr, None);
            if h.is_empty() {
                if let Some(tr) = tr {
                    if !tr.is_empty() {
                        self.syzygies.push(tr);
                    }
                }
            } else {
                let (h, tr) = self.reducer.make_monic(h, tr);
                self.insert(h, tr);
            }
        }
        let basis = self.interreduce();
        EngineOutput {
            basis,
            syzygies: self.syzygies,
        }
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.reducer.order;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.lcm
                    .degree()
                    .cmp(&b.lcm.degree())
                    .then_with(|| order.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, pair: &Pair) -> (Terms<F>, Option<Terms<F>>) {
        let field = &self.reducer.field;
        let order = self.reducer.order;
        let gi = &self.reducer.elems[pair.i];
        let gj = &self.reducer.elems[pair.j];
        let mi = pair.lcm.div(&gi.lm).unwrap();
        let mj = pair.lcm.div(&gj.lm).unwrap();
        let one = field.one();
        let minus_one = field.neg(&one);
        let a = axpy_terms(field, order, &[], &one, &mi, &gi.terms);
        let s = axpy_terms(field, order, &a, &minus_one, &mj, &gj.terms);
        let tr = match (&gi.trace, &gj.trace) {
            (Some(ti), Some(tj)) => {
                let a = axpy_terms(field, order, &[], &one, &mi, ti);
                Some(axpy_terms(field, order, &a, &minus_one, &mj, tj))
            }
            _ => None,
        };
        (s, tr)
    }

    fn insert(&mut self, terms: Terms<F>, trace: Option<Terms<F>>) {
        let h = ReducerElem::new(terms, trace);
        let hk = self.reducer.elems.len();
        if self.tracing {
            for (k, g) in self.reducer.elems.iter().enumerate() {
                if g.comp == h.comp {
                    self.pairs.push(Pair {
                        i: k,
                        j: hk,
                        lcm: g.lm.lcm(&h.lm),
                    });
                }
            }
            self.reducer.elems.push(h);
            return;
        }

        // Gebauer–Möller update.
        let candidates: Vec<(usize, Monomial)> = self
            .reducer
            .elems
            .iter()
            .enumerate()
            .filter(|(_, g)| g.active && g.comp == h.comp)
            .map(|(k, g)| (k, g.lm.lcm(&h.lm)))
            .collect();
        let coprime = |k: usize| self.product_criterion && self.reducer.elems[k].lm.is_coprime(&h.lm);
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        for (idx, (k, l)) in candidates.iter().enumerate() {
            let dominated = candidates[idx + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2)| l2.divides(l));
            if coprime(*k) || !dominated {
                kept.push((*k, l.clone()));
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(k, _)| !coprime(*k))
            .map(|(k, lcm)| Pair { i: k, j: hk, lcm })
            .collect();

        let elems = &self.reducer.elems;
        self.pairs.retain(|p| {
            let gi = &elems[p.i];
            if gi.comp != h.comp || !h.lm.divides(&p.lcm) {
                return true;
            }
            let gj = &elems[p.j];
            gi.lm.lcm(&h.lm) == p.lcm || gj.lm.lcm(&h.lm) == p.lcm
        });
        self.pairs.extend(fresh);

        for g in self.reducer.elems.iter_mut() {
            if g.active && g.comp == h.comp && h.lm.divides(&g.lm) {
                g.active = false;
            }
        }
        self.reducer.elems.push(h);
    }

    /// Minimal, tail-reduced, monic basis sorted by increasing leading term.
    fn interreduce(&mut self) -> Vec<Terms<F>> {
        let order = self.reducer.order;
        // keep one element per minimal leading term
        let n = self.reducer.elems.len();
        for k in 0..n {
            if !self.reducer.elems[k].active {
                continue;
            }
            let (lm, comp) = (self.reducer.elems[k].lm.clone(), self.reducer.elems[k].comp);
            let redundant = self.reducer.elems.iter().enumerate().any(|(o, g)| {
                o != k && g.active && g.comp == comp && g.lm.divides(&lm) && (g.lm != lm || o < k)
            });
            if redundant {
                self.reducer.elems[k].active = false;
            }
        }
        let active: Vec<usize> = (0..n).filter(|&k| self.reducer.elems[k].active).collect();
        let mut out = Vec::with_capacity(active.len());
        for &k in &active {
            let g = &self.reducer.elems[k];
            let head = g.terms[0].clone();
            let tail = g.terms[1..].to_vec();
            let (tail, _) = self.reducer.reduce(tail, None, Some(k));
            let mut terms = Vec::with_capacity(tail.len() + 1);
            terms.push(head);
            terms.extend(tail);
            out.push(terms);
        }
        out.sort_by(|a, b| pot_cmp(order, a[0].comp, &a[0].mono, b[0].comp, &b[0].mono));
        out
    }

    pub(crate) fn ninputs(&self) -> usize {
        self.ninputs
    }
}

/// Gröbner basis of a submodule of `R^rank`, under position over the ring's
/// order.
pub(crate) fn module_buchberger<F: Field>(
    ring: &Arc<Ring<F>>,
    rank: usize,
    gens: Vec<Terms<F>>,
    tracing: bool,
) -> EngineOutput<F> {
    let engine = Engine::new(ring, rank, gens.len(), tracing);
    debug_assert_eq!(engine.ninputs(), gens.len());
    engine.run(gens)
}

/// Full normal form of `p` with respect to a finished basis.
pub(crate) fn normal_form<F: Field>(ring: &Arc<Ring<F>>, basis: &[Terms<F>], p: Terms<F>) -> Terms<F> {
    let mut reducer = Reducer::new(ring.field().clone(), ring.order());
    reducer.elems = basis.iter().map(|t| ReducerElem::new(t.clone(), None)).collect();
    reducer.reduce(p, None, None).0
}
