use alloc::format;
use alloc::vec::Vec;

use super::budget::{BranchExecutor, Interrupt, NoInterrupt, SearchBudget, SerialExecutor};
use super::eval::evaluate_pair_product;
use super::layer::Layer;
use crate::count::ExactCount;
use crate::error::{invalid, Error, Result};
use crate::model::{
    binomial, canonicalize, chromatic_poly_k2n, push_into_union, CanonicalAssignment, ColorSet, Evidence,
    LayerLog, ListAssignment, Relation, SubsetTable, Verdict,
};

static SERIAL: SerialExecutor = SerialExecutor;
static NEVER: NoInterrupt = NoInterrupt;

/// Configured exact minimiser for `P_ℓ(K_{2,n}, m)`.
#[derive(Clone, Copy)]
pub struct Search<'a> {
    pub budget: SearchBudget,
    /// Lex-leader pruning over the block stabiliser. Never changes the
    /// minimum or the returned witness.
    pub symmetry: bool,
    executor: &'a dyn BranchExecutor,
    interrupt: &'a dyn Interrupt,
}

impl Search<'static> {
    pub fn new(budget: SearchBudget) -> Self {
        Search { budget, symmetry: true, executor: &SERIAL, interrupt: &NEVER }
    }
}

impl Default for Search<'static> {
    fn default() -> Self {
        Search::new(SearchBudget::default())
    }
}

impl<'a> Search<'a> {
    pub fn with_symmetry(mut self, on: bool) -> Self {
        self.symmetry = on;
        self
    }

    pub fn with_executor<'b>(self, executor: &'b dyn BranchExecutor) -> Search<'b>
    where
        'a: 'b,
    {
        Search { executor, ..self }
    }

    pub fn with_interrupt<'b>(self, interrupt: &'b dyn Interrupt) -> Search<'b>
    where
        'a: 'b,
    {
        Search { interrupt, ..self }
    }

    pub fn executor(&self) -> &'a dyn BranchExecutor {
        self.executor
    }

    pub fn interrupt(&self) -> &'a dyn Interrupt {
        self.interrupt
    }

    /// Exact `P_ℓ(K_{2,n}, m)` by searching canonical assignments for
    /// `d = m` down to `0`. Among minimisers the witness has the largest
    /// `d`, then the lexicographically smallest `z`.
    ///
    /// When the next layer would push the total number of multiplicity
    /// vectors past `max_states`, the search stops and reports what it
    /// has: `Less` if a witness below `P` was already found, otherwise
    /// `Unknown`.
    pub fn min_list_count(&self, n: u32, m: u32) -> Result<Verdict> {
        self.budget.validate()?;
        if m == 2 {
            return self.min_list_count_two(n);
        }
        if m < 2 {
            return Err(invalid!("list size m must be at least 2, got {m}"));
        }
        if n == 0 {
            return Err(invalid!("n must be at least 1"));
        }
        let chromatic = chromatic_poly_k2n(n, m);
        let mut run = LayerRun::new(&chromatic, self.budget.max_states);
        for d in (0..=m).rev() {
            let tcount = binomial(u64::from(2 * m - d), u64::from(m)) as u64;
            let space = binomial(u64::from(n) + tcount - 1, tcount - 1);
            if !run.admit(space) {
                run.notes.push(format!(
                    "stopped before d = {d}: {space} multiplicity vectors would exceed max_states = {}",
                    self.budget.max_states
                ));
                break;
            }
            let layer = match Layer::canonical(m, d, n) {
                Ok(l) if self.symmetry => l.with_block_symmetry(m, d),
                Ok(l) => l,
                Err(e) => {
                    run.notes.push(format!("stopped before d = {d}: {e}"));
                    run.complete = false;
                    break;
                }
            };
            if !run.run_layer(d, &layer, self.executor, self.interrupt, |z| {
                CanonicalAssignment::new(m, n, d, z.to_vec())
            })? {
                break;
            }
        }
        Ok(run.finish(n, m, chromatic))
    }

    /// Exact `P_ℓ(K_{2,n}, 2)`. The x-lists are canonical for each
    /// `d ∈ {2, 1, 0}`; y-lists range over the 2-subsets of the x-union
    /// plus two fresh colours. The witness is pushed into the union and
    /// canonicalised.
    pub fn min_list_count_two(&self, n: u32) -> Result<Verdict> {
        self.budget.validate()?;
        if n < 2 {
            return Err(invalid!("the two-colour search needs n >= 2, got {n}"));
        }
        let chromatic = chromatic_poly_k2n(n, 2);
        let mut run = LayerRun::new(&chromatic, self.budget.max_states);
        for d in [2u32, 1, 0] {
            let (x1, x2, types) = two_colour_layer(d);
            let tcount = types.len() as u64;
            let space = binomial(u64::from(n) + tcount - 1, tcount - 1);
            if !run.admit(space) {
                run.notes.push(format!("stopped before d = {d}: budget"));
                break;
            }
            let layer = Layer::from_lists(x1.clone(), x2.clone(), types.clone(), n)?;
            let to_canonical = |z: &[u32]| -> Result<CanonicalAssignment> {
                let mut y = Vec::with_capacity(n as usize);
                for (t, &k) in z.iter().enumerate() {
                    for _ in 0..k {
                        y.push(types[t].clone());
                    }
                }
                let la = ListAssignment::new(alloc::vec![x1.clone(), x2.clone()], y);
                canonicalize(&push_into_union(&la))
            };
            if !run.run_layer(d, &layer, self.executor, self.interrupt, to_canonical)? {
                break;
            }
        }
        let verdict = run.finish(n, 2, chromatic);
        // The union push never increases the count, so the canonical form
        // of a minimiser is still a minimiser.
        if let (Some(w), Some(v)) = (&verdict.witness, &verdict.witness_value) {
            let got = evaluate_pair_product(w);
            if got != *v {
                return Err(Error::Postcondition(format!(
                    "canonical two-colour witness evaluates to {got}, search found {v}"
                )));
            }
        }
        Ok(verdict)
    }
}

/// `x1 = {1,2}`, `x2` with `d` shared colours, and all 2-subsets of the
/// union plus two fresh colours.
fn two_colour_layer(d: u32) -> (ColorSet, ColorSet, Vec<ColorSet>) {
    let x1 = ColorSet::range(2);
    let x2 = ColorSet::new((1..=d).chain(3..=4 - d));
    let universe = 4 - d + 2;
    let table = SubsetTable::new(universe, 2);
    let types = (0..table.len()).map(|r| table.set(r)).collect();
    (x1, x2, types)
}

/// Shared bookkeeping for a sequence of layers.
struct LayerRun {
    threshold: u128,
    max_states: u64,
    admitted: u128,
    complete: bool,
    best: Option<(u128, CanonicalAssignment)>,
    layers: Vec<LayerLog>,
    notes: Vec<alloc::string::String>,
}

impl LayerRun {
    fn new(chromatic: &ExactCount, max_states: u64) -> Self {
        LayerRun {
            threshold: chromatic.to_u128().map_or(u128::MAX, |p| p.saturating_add(1)),
            max_states,
            admitted: 0,
            complete: true,
            best: None,
            layers: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn admit(&mut self, space: u128) -> bool {
        self.admitted = self.admitted.saturating_add(space);
        if self.admitted > u128::from(self.max_states) {
            self.complete = false;
            return false;
        }
        true
    }

    /// Searches one layer with threshold `P + 1`; returns `false` if it was
    /// interrupted.
    fn run_layer(
        &mut self,
        d: u32,
        layer: &Layer,
        executor: &dyn BranchExecutor,
        interrupt: &dyn Interrupt,
        to_canonical: impl Fn(&[u32]) -> Result<CanonicalAssignment>,
    ) -> Result<bool> {
        let out = layer.search(self.threshold, executor, interrupt);
        let min_value = out.best.as_ref().map(|(v, _)| ExactCount::from(*v));
        self.layers.push(LayerLog {
            d,
            states: out.states,
            min_value,
            above_chromatic: out.completed && out.best.is_none(),
            completed: out.completed,
        });
        if let Some((v, z)) = out.best {
            if self.best.as_ref().map_or(true, |(bv, _)| v < *bv) {
                self.best = Some((v, to_canonical(&z)?));
            }
        }
        if !out.completed {
            self.complete = false;
            self.notes.push(format!("interrupted while searching d = {d}"));
        }
        Ok(out.completed)
    }

    fn finish(self, n: u32, m: u32, chromatic: ExactCount) -> Verdict {
        let below = matches!(&self.best, Some((v, _)) if ExactCount::from(*v) < chromatic);
        let relation = match (self.complete, below) {
            (_, true) => Relation::Less,
            (true, false) => Relation::Equal,
            (false, false) => Relation::Unknown,
        };
        let evidence = if self.complete { Evidence::ExhaustiveSearch } else { Evidence::Incomplete };
        let mut v = Verdict::new(n, m, relation, chromatic, evidence);
        if let Some((val, w)) = self.best {
            let val = ExactCount::from(val);
            if self.complete {
                v.min_value = Some(val.clone());
            }
            v.witness_value = Some(val);
            v.witness = Some(w);
        }
        v.layers = self.layers;
        v.notes = self.notes;
        v
    }
}

/// [`Search::min_list_count`] with the given budget, serial and
/// uninterruptible.
pub fn min_list_count(n: u32, m: u32, budget: &SearchBudget) -> Result<Verdict> {
    Search::new(*budget).min_list_count(n, m)
}

/// [`Search::min_list_count_two`] with the default budget.
pub fn min_list_count_two(n: u32) -> Result<Verdict> {
    Search::default().min_list_count_two(n)
}
