//! Bounded, deterministic proof search.
//!
//! Axiom instances are drawn from small pools built from the goal: its
//! subformulas, its subterms plus `0`, and its variables plus `v0`. Level `L`
//! adds every instance whose largest pool index is `L-1`. Each new line is
//! closed under modus ponens, and under generalization when the result is a
//! subformula of the goal. Every attempted axiom instance and every derived
//! line costs one step of the budget.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use super::{Binding, Bindings, Justification, Line, MetaKind, Proof, Schema};
use crate::syntax::{Formula, Term, Var};

struct Pools {
    formulas: Vec<Formula>,
    terms: Vec<Term>,
    vars: Vec<Var>,
}

impl Pools {
    fn for_goal(goal: &Formula) -> Pools {
        let mut formulas = Vec::new();
        let mut seen = HashSet::new();
        for f in goal.subformulas() {
            if seen.insert(f) {
                formulas.push(f.clone());
            }
        }
        let mut terms = vec![Term::Zero];
        let mut seen = HashSet::from([Term::Zero]);
        for t in goal.subterms() {
            if seen.insert(t.clone()) {
                terms.push(t.clone());
            }
        }
        let mut vars: BTreeSet<Var> = goal.all_vars();
        vars.insert(Var(0));
        Pools {
            formulas,
            terms,
            vars: vars.into_iter().collect(),
        }
    }

    fn len(&self, kind: MetaKind) -> usize {
        match kind {
            MetaKind::Formula => self.formulas.len(),
            MetaKind::Term => self.terms.len(),
            MetaKind::Var => self.vars.len(),
        }
    }

    fn get(&self, kind: MetaKind, i: usize) -> Binding {
        match kind {
            MetaKind::Formula => Binding::Formula(self.formulas[i].clone()),
            MetaKind::Term => Binding::Term(self.terms[i].clone()),
            MetaKind::Var => Binding::Var(self.vars[i]),
        }
    }

    fn depth(&self) -> usize {
        self.formulas
            .len()
            .max(self.terms.len())
            .max(self.vars.len())
    }
}

struct Search<'a> {
    goal: &'a Formula,
    targets: HashSet<Formula>,
    vars: Vec<Var>,
    lines: Vec<Line>,
    index: HashMap<Formula, usize>,
    // implications whose antecedent is not derived yet, keyed by antecedent
    waiting: HashMap<Formula, Vec<usize>>,
    steps: u64,
    budget: u64,
}

enum Outcome {
    Found(usize),
    Exhausted,
    Continue,
}

impl Search<'_> {
    fn spend(&mut self) -> bool {
        if self.steps >= self.budget {
            return false;
        }
        self.steps += 1;
        true
    }

    /// Adds a line and its consequences. Returns the goal line if reached.
    fn add(&mut self, line: Line) -> Outcome {
        let mut queue = VecDeque::from([line]);
        while let Some(line) = queue.pop_front() {
            if self.index.contains_key(&line.formula) {
                continue;
            }
            if !self.spend() {
                return Outcome::Exhausted;
            }
            let i = self.lines.len();
            let f = line.formula.clone();
            self.index.insert(f.clone(), i);
            self.lines.push(line);
            if f == *self.goal {
                return Outcome::Found(i);
            }
            if let Formula::Imp(a, b) = &f {
                match self.index.get(a.as_ref()) {
                    Some(&minor) => queue.push_back(Line {
                        formula: (**b).clone(),
                        justification: Justification::ModusPonens { minor, major: i },
                    }),
                    None => self.waiting.entry((**a).clone()).or_default().push(i),
                }
            }
            for major in self.waiting.remove(&f).unwrap_or_default() {
                let Formula::Imp(_, b) = &self.lines[major].formula else {
                    unreachable!("only implications wait")
                };
                queue.push_back(Line {
                    formula: (**b).clone(),
                    justification: Justification::ModusPonens { minor: i, major },
                });
            }
            for &v in &self.vars {
                let g = Formula::forall(v, f.clone());
                if self.targets.contains(&g) {
                    queue.push_back(Line {
                        formula: g,
                        justification: Justification::Generalization { premise: i, var: v },
                    });
                }
            }
        }
        Outcome::Continue
    }

    fn level(&mut self, pools: &Pools, level: usize) -> Outcome {
        for &schema in Schema::ALL {
            let sig = schema.signature();
            let sizes: Vec<usize> = sig.iter().map(|(_, k)| pools.len(*k).min(level)).collect();
            if sizes.contains(&0) || !sizes.contains(&level) {
                continue;
            }
            let mut idx = vec![0usize; sig.len()];
            'tuples: loop {
                if idx.iter().any(|&i| i == level - 1) {
                    if !self.spend() {
                        return Outcome::Exhausted;
                    }
                    let bindings: Bindings = sig
                        .iter()
                        .zip(&idx)
                        .map(|((m, k), &i)| (*m, pools.get(*k, i)))
                        .collect();
                    if let Ok(formula) = schema.instantiate(&bindings) {
                        let line = Line {
                            formula,
                            justification: Justification::Axiom { schema, bindings },
                        };
                        match self.add(line) {
                            Outcome::Continue => {}
                            done => return done,
                        }
                    }
                }
                let mut k = sig.len();
                loop {
                    if k == 0 {
                        break 'tuples;
                    }
                    k -= 1;
                    idx[k] += 1;
                    if idx[k] < sizes[k] {
                        break;
                    }
                    idx[k] = 0;
                }
            }
        }
        Outcome::Continue
    }

    fn extract(&self, goal: usize) -> Proof {
        let mut needed = BTreeSet::new();
        let mut stack = vec![goal];
        while let Some(i) = stack.pop() {
            if !needed.insert(i) {
                continue;
            }
            match &self.lines[i].justification {
                Justification::Axiom { .. } => {}
                Justification::ModusPonens { minor, major } => stack.extend([*minor, *major]),
                Justification::Generalization { premise, .. } => stack.push(*premise),
            }
        }
        let renumber: HashMap<usize, usize> = needed
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        let lines = needed
            .iter()
            .map(|&i| {
                let line = &self.lines[i];
                let justification = match &line.justification {
                    Justification::ModusPonens { minor, major } => Justification::ModusPonens {
                        minor: renumber[minor],
                        major: renumber[major],
                    },
                    Justification::Generalization { premise, var } => {
                        Justification::Generalization {
                            premise: renumber[premise],
                            var: *var,
                        }
                    }
                    j => j.clone(),
                };
                Line {
                    formula: line.formula.clone(),
                    justification,
                }
            })
            .collect();
        Proof { lines }
    }
}

/// Looks for a proof of `goal` within `budget` steps. `None` means the budget
/// ran out or the pools were exhausted, never that `goal` is unprovable.
///
/// The search is deterministic, so a proof found at some budget is found at
/// every larger budget.
pub fn search_proof(goal: &Formula, budget: u64) -> Option<Proof> {
    let pools = Pools::for_goal(goal);
    let mut search = Search {
        goal,
        targets: goal.subformulas().into_iter().cloned().collect(),
        vars: pools.vars.clone(),
        lines: Vec::new(),
        index: HashMap::new(),
        waiting: HashMap::new(),
        steps: 0,
        budget,
    };
    for level in 1..=pools.depth() {
        match search.level(&pools, level) {
            Outcome::Found(i) => return Some(search.extract(i)),
            Outcome::Exhausted => return None,
            Outcome::Continue => {}
        }
    }
    None
}
