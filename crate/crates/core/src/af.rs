//! Mined argumentation frameworks and their semantics.
//!
//! Arguments are the past cases, the default argument and optionally one new
//! case. Between labelled arguments, `α` attacks `β` when their outcomes
//! differ, `α` is at least as specific as `β`, and no labelled argument with
//! `α`'s outcome lies strictly between them. The new case attacks every
//! labelled argument it is not a superset of, and is never attacked.
//!
//! Arguments are stored sorted by `(kind, id)`, so the default argument is
//! always index 0 and a new case, if any, is always last.

use std::collections::BTreeSet;
use std::fmt;

use crate::casebase::{Case, Casebase, NewCase, Outcome};
use crate::error::{Error, Result};
use crate::order::Characterisation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ArgKind {
    Default,
    PastCase,
    NewCase,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Argument {
    Default(Case),
    Past(Case),
    New(NewCase),
}

impl Argument {
    pub fn kind(&self) -> ArgKind {
        match self {
            Argument::Default(_) => ArgKind::Default,
            Argument::Past(_) => ArgKind::PastCase,
            Argument::New(_) => ArgKind::NewCase,
        }
    }

    pub fn id(&self) -> &str {
        match self {
            Argument::Default(c) | Argument::Past(c) => &c.id,
            Argument::New(n) => &n.id,
        }
    }

    pub fn characterisation(&self) -> &Characterisation {
        match self {
            Argument::Default(c) | Argument::Past(c) => &c.characterisation,
            Argument::New(n) => &n.characterisation,
        }
    }

    /// `None` for the new case.
    pub fn outcome(&self) -> Option<Outcome> {
        match self {
            Argument::Default(c) | Argument::Past(c) => Some(c.outcome),
            Argument::New(_) => None,
        }
    }

    pub fn labelled(&self) -> Option<&Case> {
        match self {
            Argument::Default(c) | Argument::Past(c) => Some(c),
            Argument::New(_) => None,
        }
    }

    fn sort_key(&self) -> (ArgKind, &str) {
        (self.kind(), self.id())
    }
}

impl fmt::Display for Argument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Argument::Default(c) | Argument::Past(c) => c.fmt(f),
            Argument::New(n) => write!(f, "{}({}:?)", n.id, n.characterisation),
        }
    }
}

/// An attack graph over indexed arguments.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArgGraph {
    args: Vec<Argument>,
    attacks: BTreeSet<(usize, usize)>,
    attackers: Vec<Vec<usize>>,
    targets: Vec<Vec<usize>>,
}

impl ArgGraph {
    /// Builds a graph from arbitrary arguments and attacks given as index
    /// pairs into `args`. Arguments are re-sorted by `(kind, id)`.
    pub fn from_parts(
        args: Vec<Argument>,
        attacks: impl IntoIterator<Item = (usize, usize)>,
    ) -> Self {
        let mut order: Vec<usize> = (0..args.len()).collect();
        order.sort_by(|&a, &b| args[a].sort_key().cmp(&args[b].sort_key()));
        let mut position = vec![0; args.len()];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let mut slots: Vec<Option<Argument>> = args.into_iter().map(Some).collect();
        let args: Vec<Argument> = order
            .iter()
            .map(|&i| slots[i].take().expect("each slot once"))
            .collect();
        let attacks: BTreeSet<(usize, usize)> = attacks
            .into_iter()
            .map(|(a, b)| (position[a], position[b]))
            .collect();
        Self::indexed(args, attacks)
    }

    fn indexed(args: Vec<Argument>, attacks: BTreeSet<(usize, usize)>) -> Self {
        let mut attackers = vec![Vec::new(); args.len()];
        let mut targets = vec![Vec::new(); args.len()];
        for &(a, b) in &attacks {
            assert!(
                a < args.len() && b < args.len(),
                "attack endpoint out of range"
            );
            attackers[b].push(a);
            targets[a].push(b);
        }
        Self {
            args,
            attacks,
            attackers,
            targets,
        }
    }

    pub fn len(&self) -> usize {
        self.args.len()
    }

    pub fn is_empty(&self) -> bool {
        self.args.is_empty()
    }

    pub fn arguments(&self) -> &[Argument] {
        &self.args
    }

    pub fn argument(&self, i: usize) -> &Argument {
        &self.args[i]
    }

    pub fn attacks(&self) -> &BTreeSet<(usize, usize)> {
        &self.attacks
    }

    pub fn attacks_on(&self, i: usize) -> &[usize] {
        &self.attackers[i]
    }

    pub fn attacks_from(&self, i: usize) -> &[usize] {
        &self.targets[i]
    }

    pub fn attacks_pair(&self, a: usize, b: usize) -> bool {
        self.attacks.contains(&(a, b))
    }

    pub fn index_of(&self, kind: ArgKind, id: &str) -> Option<usize> {
        self.args
            .binary_search_by(|a| a.sort_key().cmp(&(kind, id)))
            .ok()
    }

    pub fn default_index(&self) -> Option<usize> {
        self.args.iter().position(|a| a.kind() == ArgKind::Default)
    }

    pub fn new_case_index(&self) -> Option<usize> {
        self.args.iter().position(|a| a.kind() == ArgKind::NewCase)
    }

    /// Past cases (default argument excluded).
    pub fn past_cases(&self) -> impl Iterator<Item = &Case> {
        self.args.iter().filter_map(|a| match a {
            Argument::Past(c) => Some(c),
            _ => None,
        })
    }

    /// Attacks as `(attacker, target)` argument pairs, order-independent of
    /// indices; two graphs over the same arguments are equal iff these are.
    pub fn edge_set(&self) -> BTreeSet<((ArgKind, String), (ArgKind, String))> {
        self.attacks
            .iter()
            .map(|&(a, b)| {
                let key = |i: usize| (self.args[i].kind(), self.args[i].id().to_string());
                (key(a), key(b))
            })
            .collect()
    }

    /// The graph with the new case (if any) and its attacks removed.
    pub fn labelled(&self) -> ArgGraph {
        match self.new_case_index() {
            None => self.clone(),
            Some(n) => {
                let args: Vec<Argument> = self.args[..n].to_vec();
                let attacks = self
                    .attacks
                    .iter()
                    .copied()
                    .filter(|&(a, b)| a != n && b != n)
                    .collect();
                Self::indexed(args, attacks)
            }
        }
    }

    /// Replaces any existing new case with `newcase`, adding its irrelevance
    /// attacks against every labelled argument.
    pub fn with_new_case(&self, newcase: &NewCase) -> ArgGraph {
        let base = self.labelled();
        let n = base.args.len();
        let mut attacks = base.attacks;
        for (i, a) in base.args.iter().enumerate() {
            if newcase.characterisation.irrelevant_to(a.characterisation()) {
                attacks.insert((n, i));
            }
        }
        let mut args = base.args;
        args.push(Argument::New(newcase.clone()));
        Self::indexed(args, attacks)
    }
}

/// Mines the attack graph of `cb` and, if given, a new case.
pub fn mine_af(cb: &Casebase, newcase: Option<&NewCase>) -> ArgGraph {
    let mut args = Vec::with_capacity(cb.len() + 2);
    args.push(Argument::Default(cb.default_case().clone()));
    args.extend(cb.cases().iter().cloned().map(Argument::Past));
    // Casebase keeps cases sorted by id, so this is already canonical order.
    debug_assert!(args.windows(2).all(|w| w[0].sort_key() <= w[1].sort_key()));

    let labelled: Vec<&Case> = args.iter().filter_map(Argument::labelled).collect();
    let mut attacks = BTreeSet::new();
    for (i, alpha) in labelled.iter().enumerate() {
        for (j, beta) in labelled.iter().enumerate() {
            if labelled_attack(alpha, beta, &labelled) {
                attacks.insert((i, j));
            }
        }
    }
    let graph = ArgGraph::indexed(args, attacks);
    match newcase {
        Some(n) => graph.with_new_case(n),
        None => graph,
    }
}

/// Attack condition between two labelled arguments, with blockers drawn from
/// `scope`.
pub(crate) fn labelled_attack(alpha: &Case, beta: &Case, scope: &[&Case]) -> bool {
    alpha.outcome != beta.outcome
        && alpha.characterisation.geq(&beta.characterisation)
        && !scope.iter().any(|gamma| {
            gamma.outcome == alpha.outcome
                && alpha.characterisation.gt(&gamma.characterisation)
                && gamma.characterisation.gt(&beta.characterisation)
        })
}

/// Grounded extension built as `G_0 ⊆ G_1 ⊆ …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extension {
    /// Argument indices of the graph this was computed on.
    pub members: BTreeSet<usize>,
    /// `strata[i]` is `G_i`; the last entry equals `members`.
    pub strata: Vec<BTreeSet<usize>>,
}

impl Extension {
    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(&i)
    }

    /// Index of the first stratum containing `i`.
    pub fn stratum_of(&self, i: usize) -> Option<usize> {
        self.strata.iter().position(|g| g.contains(&i))
    }
}

/// `G_0` is the unattacked arguments and `G_{i+1}` the arguments defended by
/// `G_i`; iteration stops at the first fixed point.
pub fn grounded_extension(g: &ArgGraph) -> Extension {
    let unattacked: BTreeSet<usize> = (0..g.len())
        .filter(|&i| g.attacks_on(i).is_empty())
        .collect();
    let mut strata = vec![unattacked];
    loop {
        let current = strata.last().expect("non-empty");
        let next = defended_by(g, current);
        if &next == current {
            break;
        }
        strata.push(next);
    }
    Extension {
        members: strata.last().cloned().unwrap_or_default(),
        strata,
    }
}

/// Arguments all of whose attackers are attacked by some member of `set`.
pub fn defended_by(g: &ArgGraph, set: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut countered = vec![false; g.len()];
    for &s in set {
        for &t in g.attacks_from(s) {
            countered[t] = true;
        }
    }
    (0..g.len())
        .filter(|&i| g.attacks_on(i).iter().all(|&b| countered[b]))
        .collect()
}

pub fn is_acyclic(g: &ArgGraph) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Mark {
        New,
        Open,
        Done,
    }
    let mut mark = vec![Mark::New; g.len()];
    for root in 0..g.len() {
        if mark[root] != Mark::New {
            continue;
        }
        // Iterative DFS: (node, next child position).
        let mut stack = vec![(root, 0usize)];
        mark[root] = Mark::Open;
        while let Some(&mut (node, ref mut pos)) = stack.last_mut() {
            let children = g.attacks_from(node);
            if *pos < children.len() {
                let child = children[*pos];
                *pos += 1;
                match mark[child] {
                    Mark::Open => return false,
                    Mark::New => {
                        mark[child] = Mark::Open;
                        stack.push((child, 0));
                    }
                    Mark::Done => {}
                }
            } else {
                mark[node] = Mark::Done;
                stack.pop();
            }
        }
    }
    true
}

pub const STABLE_ENUMERATION_LIMIT: usize = 20;

/// Every conflict-free set attacking all arguments outside it, found by
/// subset enumeration. Intended as a test oracle.
pub fn stable_extensions_bruteforce(g: &ArgGraph) -> Result<Vec<BTreeSet<usize>>> {
    let n = g.len();
    if n > STABLE_ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            size: n,
            limit: STABLE_ENUMERATION_LIMIT,
        });
    }
    let attacks: Vec<(usize, usize)> = g.attacks().iter().copied().collect();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let inside = |i: usize| mask & (1 << i) != 0;
        if attacks.iter().any(|&(a, b)| inside(a) && inside(b)) {
            continue;
        }
        let mut hit = mask;
        for &(a, b) in &attacks {
            if inside(a) {
                hit |= 1 << b;
            }
        }
        if hit == (1u32 << n) - 1 {
            out.push((0..n).filter(|&i| inside(i)).collect());
        }
    }
    Ok(out)
}
