//! Functions between weight diagrams and the three local moves that build the
//! allowable ones from identities on typical diagrams.
//!
//! A function `f: μ → λ` is stored as the list `f(a_1), …, f(a_n)` over the
//! ascending dots of `μ`. The moves are local rewrites around a pivot `j`:
//!
//! * Move 1 slides a fixed isolated dot `j−1` to `j` in both rows.
//! * Move 2 slides a fixed dot `j−1` to `j` in the source while the target
//!   dot `j−1` drops to `j−2`; the arrow that landed on `j` from `k > j` is
//!   redirected to `j−2`.
//! * Move 3 slides an isolated source pair `(j−1, j)` to `(j, j+1)` keeping
//!   its images.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{self, render_window, WeightDiagram};
use crate::error::{Error, Result};
use crate::resolution::{resolve_with_functions, LabelledResolution};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    Move1,
    Move2,
    Move3,
}

/// One move application. `k` is present only for Move 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MoveRecord {
    pub kind: MoveKind,
    pub j: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
}

impl MoveRecord {
    pub fn move1(j: i64) -> Self {
        MoveRecord {
            kind: MoveKind::Move1,
            j,
            k: None,
        }
    }

    pub fn move2(j: i64, k: i64) -> Self {
        MoveRecord {
            kind: MoveKind::Move2,
            j,
            k: Some(k),
        }
    }

    pub fn move3(j: i64) -> Self {
        MoveRecord {
            kind: MoveKind::Move3,
            j,
            k: None,
        }
    }

    fn shifted(&self, c: i64) -> Result<MoveRecord> {
        let add = |x: i64| x.checked_add(c).ok_or(Error::Overflow("move shift"));
        Ok(MoveRecord {
            kind: self.kind,
            j: add(self.j)?,
            k: self.k.map(add).transpose()?,
        })
    }
}

impl fmt::Display for MoveRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.kind, self.k) {
            (MoveKind::Move2, Some(k)) => write!(f, "Move2(j={}, k={k})", self.j),
            (kind, _) => write!(f, "{kind:?}(j={})", self.j),
        }
    }
}

/// A bijection from the dots of `source` onto the dots of `target`, with the
/// moves that produced it (empty for a bare identity or a hand-built function).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FunctionWire", into = "FunctionWire")]
pub struct AllowableFunction {
    source: WeightDiagram,
    target: WeightDiagram,
    pairing: Vec<i64>,
    trace: Vec<MoveRecord>,
}

#[derive(Serialize, Deserialize)]
struct FunctionWire {
    source: WeightDiagram,
    target: WeightDiagram,
    pairing: Vec<i64>,
    #[serde(default)]
    trace: Vec<MoveRecord>,
}

impl TryFrom<FunctionWire> for AllowableFunction {
    type Error = Error;
    fn try_from(w: FunctionWire) -> Result<Self> {
        let mut f = AllowableFunction::new(w.source, w.target, w.pairing)?;
        f.trace = w.trace;
        Ok(f)
    }
}

impl From<AllowableFunction> for FunctionWire {
    fn from(f: AllowableFunction) -> Self {
        FunctionWire {
            source: f.source,
            target: f.target,
            pairing: f.pairing,
            trace: f.trace,
        }
    }
}

impl AllowableFunction {
    /// Checks that `pairing` is a bijection onto the dots of `target`.
    pub fn new(source: WeightDiagram, target: WeightDiagram, pairing: Vec<i64>) -> Result<Self> {
        if source.len() != target.len() {
            return Err(Error::SizeMismatch {
                left: source.len(),
                right: target.len(),
            });
        }
        if pairing.len() != source.len() {
            return Err(Error::InvalidFunction(format!(
                "pairing has {} entries for {} source dots",
                pairing.len(),
                source.len()
            )));
        }
        let mut sorted = pairing.clone();
        sorted.sort_unstable();
        if sorted != target.dots() {
            return Err(Error::InvalidFunction(format!(
                "pairing {pairing:?} is not a bijection onto {target}"
            )));
        }
        Ok(AllowableFunction {
            source,
            target,
            pairing,
            trace: Vec::new(),
        })
    }

    pub fn identity(d: &WeightDiagram) -> Self {
        AllowableFunction {
            source: d.clone(),
            target: d.clone(),
            pairing: d.dots().to_vec(),
            trace: Vec::new(),
        }
    }

    /// Builds from `(a, f(a))` pairs in any order.
    pub fn from_pairs(mut pairs: Vec<(i64, i64)>) -> Result<Self> {
        pairs.sort_unstable();
        let source = WeightDiagram::new(pairs.iter().map(|p| p.0).collect())?;
        let target = WeightDiagram::from_unsorted(pairs.iter().map(|p| p.1).collect())?;
        let pairing = pairs.iter().map(|p| p.1).collect();
        AllowableFunction::new(source, target, pairing)
    }

    pub fn with_trace(mut self, trace: Vec<MoveRecord>) -> Self {
        self.trace = trace;
        self
    }

    pub fn source(&self) -> &WeightDiagram {
        &self.source
    }

    pub fn target(&self) -> &WeightDiagram {
        &self.target
    }

    pub fn pairing(&self) -> &[i64] {
        &self.pairing
    }

    pub fn trace(&self) -> &[MoveRecord] {
        &self.trace
    }

    pub fn pairs(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.source.dots().iter().copied().zip(self.pairing.iter().copied())
    }

    /// `f(a)` for a source dot `a`.
    pub fn image(&self, a: i64) -> Option<i64> {
        self.source.index_of(a).map(|i| self.pairing[i])
    }

    /// The source dot mapped to target dot `b`.
    pub fn preimage(&self, b: i64) -> Option<i64> {
        self.pairing
            .iter()
            .position(|&x| x == b)
            .map(|i| self.source.dots()[i])
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.pairing == self.source.dots()
    }

    /// Same function ignoring the move trace.
    pub fn same_arrows(&self, other: &AllowableFunction) -> bool {
        self.source == other.source && self.target == other.target && self.pairing == other.pairing
    }

    /// `ℓ(target, source)`.
    pub fn relative_length(&self) -> i64 {
        diagram::ell(&self.target, &self.source).expect("sizes checked at construction")
    }

    /// Translates every coordinate, trace included, by `c`.
    pub fn shifted(&self, c: i64) -> Result<AllowableFunction> {
        let add = |x: &i64| x.checked_add(c).ok_or(Error::Overflow("function shift"));
        Ok(AllowableFunction {
            source: diagram::shift(&self.source, c)?,
            target: diagram::shift(&self.target, c)?,
            pairing: self.pairing.iter().map(add).collect::<Result<_>>()?,
            trace: self
                .trace
                .iter()
                .map(|m| m.shifted(c))
                .collect::<Result<_>>()?,
        })
    }

    /// Structural properties every allowable function has: pointwise
    /// nonincreasing, `μ ≤ λ`, and even relative length. Returns the first
    /// violation.
    pub fn shape_violation(&self) -> Option<String> {
        if let Some((a, b)) = self.pairs().find(|&(a, b)| b > a) {
            return Some(format!("f({a}) = {b} exceeds {a}"));
        }
        if !diagram::leq(&self.source, &self.target).unwrap_or(false) {
            return Some(format!("{} ≤ {} fails", self.source, self.target));
        }
        let l = self.relative_length();
        if l % 2 != 0 {
            return Some(format!("relative length {l} is odd"));
        }
        None
    }

    /// Two-row picture (source over target) followed by the arrow list.
    pub fn render_ascii(&self) -> String {
        let lo = self.source.min_dot().min(self.target.min_dot()) - 1;
        let hi = self.source.max_dot().max(self.target.max_dot()) + 1;
        let mut out = render_window(&[&self.source, &self.target], lo, hi);
        for (a, b) in self.pairs() {
            out.push_str(&format!("\n{a} -> {b}"));
        }
        out
    }
}

impl fmt::Display for AllowableFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (a, b)) in self.pairs().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}->{b}")?;
        }
        write!(f, "}}")
    }
}

/// Why the local pattern of `m` fails on `f`, if it does.
pub fn move_violation(f: &AllowableFunction, m: &MoveRecord) -> Option<String> {
    let j = m.j;
    let src = &f.source;
    let tgt = &f.target;
    let need = |ok: bool, what: &str| if ok { None } else { Some(what.to_string()) };
    match m.kind {
        MoveKind::Move1 => need(m.k.is_none(), "Move1 takes no k")
            .or_else(|| need(src.has_dot(j - 1), "source needs a dot at j-1"))
            .or_else(|| need(!src.has_dot(j - 2), "source must have no dot at j-2"))
            .or_else(|| need(!src.has_dot(j), "source must have no dot at j"))
            .or_else(|| need(tgt.has_dot(j - 1), "target needs a dot at j-1"))
            .or_else(|| need(!tgt.has_dot(j - 2), "target must have no dot at j-2"))
            .or_else(|| need(!tgt.has_dot(j), "target must have no dot at j"))
            .or_else(|| need(f.image(j - 1) == Some(j - 1), "f(j-1) must equal j-1")),
        MoveKind::Move2 => {
            let Some(k) = m.k else {
                return Some("Move2 needs k".into());
            };
            need(src.has_dot(j - 1), "source needs a dot at j-1")
                .or_else(|| need(!src.has_dot(j - 2), "source must have no dot at j-2"))
                .or_else(|| need(!src.has_dot(j), "source must have no dot at j"))
                .or_else(|| need(tgt.has_dot(j - 1), "target needs a dot at j-1"))
                .or_else(|| need(tgt.has_dot(j), "target needs a dot at j"))
                .or_else(|| need(!tgt.has_dot(j - 2), "target must have no dot at j-2"))
                .or_else(|| need(f.image(j - 1) == Some(j - 1), "f(j-1) must equal j-1"))
                .or_else(|| need(k > j, "k must exceed j"))
                .or_else(|| need(f.image(k) == Some(j), "k must be a source dot with f(k) = j"))
        }
        MoveKind::Move3 => need(m.k.is_none(), "Move3 takes no k")
            .or_else(|| need(src.has_dot(j - 1), "source needs a dot at j-1"))
            .or_else(|| need(src.has_dot(j), "source needs a dot at j"))
            .or_else(|| need(!src.has_dot(j - 2), "source must have no dot at j-2"))
            .or_else(|| need(!src.has_dot(j + 1), "source must have no dot at j+1"))
            .or_else(|| {
                need(
                    f.image(j - 1) < f.image(j),
                    "images of the pair must satisfy f(j-1) < f(j)",
                )
            }),
    }
}

/// Every move whose local pattern holds, ordered by `(j, kind, k)`.
pub fn applicable_moves(f: &AllowableFunction) -> Vec<MoveRecord> {
    let mut out = Vec::new();
    let src = &f.source;
    for (idx, &a) in src.dots().iter().enumerate() {
        let j = a + 1;
        if src.has_dot(a - 1) {
            continue;
        }
        if src.has_dot(j) {
            let m = MoveRecord::move3(j);
            if move_violation(f, &m).is_none() {
                out.push(m);
            }
            continue;
        }
        if f.pairing[idx] != a {
            continue;
        }
        let m1 = MoveRecord::move1(j);
        if move_violation(f, &m1).is_none() {
            out.push(m1);
        }
        if let Some(k) = f.preimage(j) {
            let m2 = MoveRecord::move2(j, k);
            if move_violation(f, &m2).is_none() {
                out.push(m2);
            }
        }
    }
    out.sort();
    out
}

/// Applies `m`, appending it to the trace.
pub fn apply_move(f: &AllowableFunction, m: &MoveRecord) -> Result<AllowableFunction> {
    if let Some(why) = move_violation(f, m) {
        return Err(Error::InapplicableMove(format!("{m} on {f}: {why}")));
    }
    let j = m.j;
    let pairs: Vec<(i64, i64)> = match m.kind {
        MoveKind::Move1 => f
            .pairs()
            .map(|(a, b)| if a == j - 1 { (j, j) } else { (a, b) })
            .collect(),
        MoveKind::Move2 => {
            let k = m.k.expect("checked");
            f.pairs()
                .map(|(a, b)| {
                    if a == j - 1 {
                        (j, j)
                    } else if a == k {
                        (k, j - 2)
                    } else {
                        (a, b)
                    }
                })
                .collect()
        }
        MoveKind::Move3 => f
            .pairs()
            .map(|(a, b)| {
                if a == j - 1 || a == j {
                    (a + 1, b)
                } else {
                    (a, b)
                }
            })
            .collect(),
    };
    let mut trace = f.trace.clone();
    trace.push(*m);
    Ok(AllowableFunction::from_pairs(pairs)?.with_trace(trace))
}

/// Why `m` cannot be undone on `f`: the local picture after the move is absent.
fn undo_violation(f: &AllowableFunction, m: &MoveRecord) -> Option<String> {
    let j = m.j;
    let src = &f.source;
    let tgt = &f.target;
    let need = |ok: bool, what: &str| if ok { None } else { Some(what.to_string()) };
    match m.kind {
        MoveKind::Move1 => need(src.has_dot(j), "source needs a dot at j")
            .or_else(|| need(!src.has_dot(j - 1), "source must have no dot at j-1"))
            .or_else(|| need(!src.has_dot(j - 2), "source must have no dot at j-2"))
            .or_else(|| need(tgt.has_dot(j), "target needs a dot at j"))
            .or_else(|| need(!tgt.has_dot(j - 1), "target must have no dot at j-1"))
            .or_else(|| need(!tgt.has_dot(j - 2), "target must have no dot at j-2"))
            .or_else(|| need(f.image(j) == Some(j), "f(j) must equal j")),
        MoveKind::Move2 => {
            let Some(k) = m.k else {
                return Some("Move2 needs k".into());
            };
            need(src.has_dot(j), "source needs a dot at j")
                .or_else(|| need(!src.has_dot(j - 1), "source must have no dot at j-1"))
                .or_else(|| need(!src.has_dot(j - 2), "source must have no dot at j-2"))
                .or_else(|| need(tgt.has_dot(j), "target needs a dot at j"))
                .or_else(|| need(tgt.has_dot(j - 2), "target needs a dot at j-2"))
                .or_else(|| need(!tgt.has_dot(j - 1), "target must have no dot at j-1"))
                .or_else(|| need(f.image(j) == Some(j), "f(j) must equal j"))
                .or_else(|| need(k > j, "k must exceed j"))
                .or_else(|| need(f.image(k) == Some(j - 2), "f(k) must equal j-2"))
        }
        MoveKind::Move3 => need(src.has_dot(j), "source needs a dot at j")
            .or_else(|| need(src.has_dot(j + 1), "source needs a dot at j+1"))
            .or_else(|| need(!src.has_dot(j - 1), "source must have no dot at j-1"))
            .or_else(|| need(!src.has_dot(j - 2), "source must have no dot at j-2"))
            .or_else(|| need(f.image(j) < f.image(j + 1), "f(j) < f(j+1) required")),
    }
}

/// Inverse of [`apply_move`]: returns the function `m` was applied to. The
/// trace is popped when its last entry is `m`.
pub fn undo_move(f: &AllowableFunction, m: &MoveRecord) -> Result<AllowableFunction> {
    if let Some(why) = undo_violation(f, m) {
        return Err(Error::InapplicableMove(format!("undo {m} on {f}: {why}")));
    }
    let j = m.j;
    let pairs: Vec<(i64, i64)> = match m.kind {
        MoveKind::Move1 => f
            .pairs()
            .map(|(a, b)| if a == j { (j - 1, j - 1) } else { (a, b) })
            .collect(),
        MoveKind::Move2 => {
            let k = m.k.expect("checked");
            f.pairs()
                .map(|(a, b)| {
                    if a == j {
                        (j - 1, j - 1)
                    } else if a == k {
                        (k, j)
                    } else {
                        (a, b)
                    }
                })
                .collect()
        }
        MoveKind::Move3 => f
            .pairs()
            .map(|(a, b)| {
                if a == j || a == j + 1 {
                    (a - 1, b)
                } else {
                    (a, b)
                }
            })
            .collect(),
    };
    let mut trace = f.trace.clone();
    if trace.last() == Some(m) {
        trace.pop();
    }
    Ok(AllowableFunction::from_pairs(pairs)?.with_trace(trace))
}

/// Leapfrogging pairs: `i < j` with `f(a_i) > f(a_j)`, by direct pair scan.
pub fn leapfrog_count(f: &AllowableFunction) -> usize {
    let p = &f.pairing;
    (0..p.len())
        .map(|j| (0..j).filter(|&i| p[i] > p[j]).count())
        .sum()
}

/// Inversion count of a sequence by merge sort.
pub fn inversion_count(values: &[i64]) -> usize {
    fn sort_count(v: &mut [i64], buf: &mut Vec<i64>) -> usize {
        let n = v.len();
        if n < 2 {
            return 0;
        }
        let mid = n / 2;
        let mut count = sort_count(&mut v[..mid], buf) + sort_count(&mut v[mid..], buf);
        buf.clear();
        let (mut i, mut j) = (0, mid);
        while i < mid && j < n {
            if v[i] <= v[j] {
                buf.push(v[i]);
                i += 1;
            } else {
                count += mid - i;
                buf.push(v[j]);
                j += 1;
            }
        }
        buf.extend_from_slice(&v[i..mid]);
        buf.extend_from_slice(&v[j..n]);
        v.copy_from_slice(buf);
        count
    }
    let mut v = values.to_vec();
    let mut buf = Vec::with_capacity(v.len());
    sort_count(&mut v, &mut buf)
}

/// `ℓ(λ, μ)/2 − L(f)`.
pub fn degree(f: &AllowableFunction) -> Result<i64> {
    let l = f.relative_length();
    if l % 2 != 0 {
        return Err(Error::OddRelativeLength(l));
    }
    Ok(l / 2 - leapfrog_count(f) as i64)
}

/// Allowable functions out of `mu`, grouped by degree `0..=max_degree`, each
/// group sorted by `(target, pairing)`.
pub fn enumerate_allowable(
    mu: &WeightDiagram,
    max_degree: usize,
) -> Result<BTreeMap<usize, Vec<AllowableFunction>>> {
    let labelled = resolve_with_functions(mu, max_degree)?;
    Ok(group_by_degree(&labelled))
}

pub(crate) fn group_by_degree(
    labelled: &LabelledResolution,
) -> BTreeMap<usize, Vec<AllowableFunction>> {
    labelled
        .terms
        .iter()
        .map(|term| {
            let mut fs: Vec<AllowableFunction> =
                term.summands.values().flatten().cloned().collect();
            fs.sort_by(|a, b| (&a.target, &a.pairing).cmp(&(&b.target, &b.pairing)));
            (term.degree, fs)
        })
        .collect()
}

/// Membership in the enumeration at the function's own degree.
pub fn is_allowable(f: &AllowableFunction) -> bool {
    if f.shape_violation().is_some() {
        return false;
    }
    let d = match degree(f) {
        Ok(d) if d >= 0 => d as usize,
        _ => return false,
    };
    match resolve_with_functions(&f.source, d) {
        Ok(r) => r.terms[d]
            .summands
            .get(&f.target)
            .is_some_and(|fs| fs.iter().any(|g| g.same_arrows(f))),
        Err(_) => false,
    }
}

/// Searches for inverse moves taking `f` back to an identity on a typical
/// diagram, keeping every dot inside `[min − margin, max + margin]` of the
/// starting picture. The returned moves are in undo order; applying them in
/// reverse to the identity reproduces `f`.
///
/// `None` means no certificate exists inside the window, not that `f` is not
/// allowable.
pub fn reduce_to_identity(f: &AllowableFunction, window_margin: i64) -> Option<Vec<MoveRecord>> {
    if f.shape_violation().is_some() {
        return None;
    }
    let budget = f.relative_length() / 2;
    let lo = f.source.min_dot().min(f.target.min_dot()) - window_margin;
    let hi = f.source.max_dot().max(f.target.max_dot()) + window_margin;
    let mut search = Reducer {
        lo,
        hi,
        failed: HashSet::new(),
        path: Vec::new(),
    };
    let start = f.clone().with_trace(Vec::new());
    if search.dfs(&start, budget) {
        Some(search.path)
    } else {
        None
    }
}

/// Default window margin for [`reduce_to_identity`]: twice the number of dots.
pub fn default_margin(f: &AllowableFunction) -> i64 {
    2 * f.source.len() as i64
}

struct Reducer {
    lo: i64,
    hi: i64,
    failed: HashSet<(Vec<i64>, Vec<i64>, i64)>,
    path: Vec<MoveRecord>,
}

impl Reducer {
    fn inside(&self, f: &AllowableFunction) -> bool {
        f.source.min_dot() >= self.lo
            && f.target.min_dot() >= self.lo
            && f.source.max_dot() <= self.hi
            && f.target.max_dot() <= self.hi
    }

    fn candidates(f: &AllowableFunction) -> Vec<MoveRecord> {
        let mut out = Vec::new();
        for (a, b) in f.pairs() {
            // Move3 leaves the pair (j, j+1); Move1/Move2 leave a fixed dot j.
            if f.source.has_dot(a + 1) && !f.source.has_dot(a - 1) {
                out.push(MoveRecord::move3(a));
            }
            if a == b {
                for (k, fk) in f.pairs() {
                    if fk == a - 2 && k > a {
                        out.push(MoveRecord::move2(a, k));
                    }
                }
                out.push(MoveRecord::move1(a));
            }
        }
        out.retain(|m| undo_violation(f, m).is_none());
        // Spend the non-Move1 budget first.
        out.sort_by_key(|m| (m.kind == MoveKind::Move1, m.j));
        out
    }

    fn dfs(&mut self, f: &AllowableFunction, budget: i64) -> bool {
        if budget == 0 && f.is_identity() && diagram::is_typical(&f.source) {
            return true;
        }
        if budget < 0 || (budget == 0 && !f.is_identity()) {
            return false;
        }
        let key = (f.source.dots().to_vec(), f.pairing.clone(), budget);
        if self.failed.contains(&key) {
            return false;
        }
        for m in Self::candidates(f) {
            let cost = i64::from(m.kind != MoveKind::Move1);
            if cost > budget {
                continue;
            }
            let Ok(prev) = undo_move(f, &m) else { continue };
            if !self.inside(&prev) {
                continue;
            }
            self.path.push(m);
            if self.dfs(&prev, budget - cost) {
                return true;
            }
            self.path.pop();
        }
        self.failed.insert(key);
        false
    }
}

/// Replays an undo sequence forward from the identity it ends on.
pub fn replay_reduction(f: &AllowableFunction, undo_moves: &[MoveRecord]) -> Result<AllowableFunction> {
    let mut g = f.clone().with_trace(Vec::new());
    for m in undo_moves {
        g = undo_move(&g, m)?;
    }
    let mut h = AllowableFunction::identity(&g.source);
    for m in undo_moves.iter().rev() {
        h = apply_move(&h, m)?;
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wd(v: &[i64]) -> WeightDiagram {
        WeightDiagram::new(v.to_vec()).unwrap()
    }

    fn func(pairs: &[(i64, i64)]) -> AllowableFunction {
        AllowableFunction::from_pairs(pairs.to_vec()).unwrap()
    }

    #[test]
    fn construction_checks_bijection() {
        assert!(AllowableFunction::new(wd(&[0, 1]), wd(&[0, 1]), vec![0, 0]).is_err());
        assert!(AllowableFunction::new(wd(&[0, 1]), wd(&[0, 2]), vec![0, 1]).is_err());
        assert!(AllowableFunction::new(wd(&[0]), wd(&[0, 1]), vec![0]).is_err());
        let f = AllowableFunction::new(wd(&[0, 1]), wd(&[-1, 0]), vec![0, -1]).unwrap();
        assert_eq!(f.image(1), Some(-1));
        assert_eq!(f.preimage(0), Some(0));
    }

    #[test]
    fn applicable_on_identities() {
        let id = AllowableFunction::identity(&wd(&[0, 1]));
        assert_eq!(applicable_moves(&id), vec![MoveRecord::move3(1)]);

        let id = AllowableFunction::identity(&wd(&[0, 2, 4]));
        assert_eq!(
            applicable_moves(&id),
            vec![MoveRecord::move1(1), MoveRecord::move1(3), MoveRecord::move1(5)]
        );

        let id = AllowableFunction::identity(&wd(&[0]));
        assert_eq!(applicable_moves(&id), vec![MoveRecord::move1(1)]);
    }

    #[test]
    fn move3_rewrite() {
        let id = AllowableFunction::identity(&wd(&[0, 1]));
        let f = apply_move(&id, &MoveRecord::move3(1)).unwrap();
        assert_eq!(f.source(), &wd(&[1, 2]));
        assert_eq!(f.target(), &wd(&[0, 1]));
        assert_eq!(f.pairing(), &[0, 1]);
        assert_eq!(f.trace(), &[MoveRecord::move3(1)]);
    }

    #[test]
    fn move1_rewrite() {
        let id = AllowableFunction::identity(&wd(&[0]));
        let f = apply_move(&id, &MoveRecord::move1(1)).unwrap();
        assert_eq!(f.source(), &wd(&[1]));
        assert_eq!(f.target(), &wd(&[1]));
        assert_eq!(f.pairing(), &[1]);
    }

    #[test]
    fn move2_rewrite() {
        let f = func(&[(0, 0), (2, 1)]);
        let m = MoveRecord::move2(1, 2);
        assert!(applicable_moves(&f).contains(&m));
        let g = apply_move(&f, &m).unwrap();
        assert_eq!(g.source(), &wd(&[1, 2]));
        assert_eq!(g.target(), &wd(&[-1, 1]));
        assert_eq!(g.image(1), Some(1));
        assert_eq!(g.image(2), Some(-1));
    }

    #[test]
    fn inapplicable_move_names_pattern() {
        let id = AllowableFunction::identity(&wd(&[0, 1]));
        let err = apply_move(&id, &MoveRecord::move1(1)).unwrap_err();
        match err {
            Error::InapplicableMove(msg) => assert!(msg.contains("no dot at j"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn undo_inverts_apply() {
        let id = AllowableFunction::identity(&wd(&[0, 1]));
        let m = MoveRecord::move3(1);
        let f = apply_move(&id, &m).unwrap();
        assert_eq!(undo_move(&f, &m).unwrap(), id);

        let f = func(&[(0, 0), (2, 1)]);
        let m = MoveRecord::move2(1, 2);
        let g = apply_move(&f, &m).unwrap();
        assert!(undo_move(&g, &m).unwrap().same_arrows(&f));
    }

    #[test]
    fn leapfrogs() {
        let f = func(&[(0, 0), (1, 1), (2, -4), (3, -3)]);
        assert_eq!(leapfrog_count(&f), 4);
        assert_eq!(inversion_count(f.pairing()), 4);
        assert_eq!(leapfrog_count(&AllowableFunction::identity(&wd(&[0, 3, 4]))), 0);
        let f = func(&[(3, 3), (4, 0), (5, 1), (7, 5), (8, 6)]);
        assert_eq!(leapfrog_count(&f), 2);
    }

    #[test]
    fn degree_formula() {
        let f = func(&[(3, 3), (4, 0), (5, 1), (7, 5), (8, 6)]);
        assert_eq!(f.relative_length(), 12);
        assert_eq!(degree(&f).unwrap(), 4);
        let odd = func(&[(0, -1)]);
        assert_eq!(degree(&odd), Err(Error::OddRelativeLength(1)));
    }

    #[test]
    fn enumeration_small_cases() {
        let e = enumerate_allowable(&wd(&[0, 1]), 3).unwrap();
        for d in 0..=3usize {
            let fs = &e[&d];
            assert_eq!(fs.len(), 1);
            let di = d as i64;
            assert_eq!(fs[0].target(), &wd(&[-di, 1 - di]));
            assert_eq!(leapfrog_count(&fs[0]), 0);
        }

        let e = enumerate_allowable(&wd(&[0, 2]), 4).unwrap();
        assert_eq!(e[&0].len(), 1);
        assert!(e[&0][0].is_identity());
        assert!((1..=4).all(|d| e[&d].is_empty()));

        let e = enumerate_allowable(&wd(&[0, 1, 2]), 1).unwrap();
        assert_eq!(e[&0].len(), 1);
        let targets: Vec<_> = e[&1].iter().map(|f| f.target().clone()).collect();
        assert_eq!(targets, vec![wd(&[-2, 0, 1]), wd(&[-1, 0, 2])]);
    }

    #[test]
    fn allowability() {
        assert!(is_allowable(&AllowableFunction::identity(&wd(&[0, 2, 5]))));
        for d in 1..4i64 {
            let crossed = func(&[(0, -d + 1), (1, -d)]);
            assert!(!is_allowable(&crossed));
        }
        let ex1 = func(&[(3, 3), (4, 0), (5, 1), (7, 5), (8, 6)]);
        assert!(is_allowable(&ex1));
        assert!(!is_allowable(&func(&[(0, 1)])));
    }

    #[test]
    fn reduction_small() {
        let id = AllowableFunction::identity(&wd(&[0, 2]));
        assert_eq!(reduce_to_identity(&id, 4), Some(vec![]));

        let f = apply_move(&AllowableFunction::identity(&wd(&[0, 1])), &MoveRecord::move3(1))
            .unwrap();
        let cert = reduce_to_identity(&f, 4).unwrap();
        assert!(cert.contains(&MoveRecord::move3(1)));
        assert_eq!(cert.iter().filter(|m| m.kind != MoveKind::Move1).count(), 1);
        assert!(replay_reduction(&f, &cert).unwrap().same_arrows(&f));
    }

    #[test]
    fn reduction_example_one() {
        let f = func(&[(3, 3), (4, 0), (5, 1), (7, 5), (8, 6)]);
        let cert = reduce_to_identity(&f, default_margin(&f)).expect("certificate");
        let heavy = cert.iter().filter(|m| m.kind != MoveKind::Move1).count();
        assert_eq!(heavy, 6);
        assert!(replay_reduction(&f, &cert).unwrap().same_arrows(&f));
    }

    #[test]
    fn rendering_lists_arrows() {
        let f = func(&[(0, -1), (1, 0)]);
        let pic = f.render_ascii();
        assert!(pic.contains("0 -> -1"));
        assert!(pic.contains("1 -> 0"));
    }

    #[test]
    fn json_shape() {
        let f = apply_move(&AllowableFunction::identity(&wd(&[0, 1])), &MoveRecord::move3(1))
            .unwrap();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"source":[1,2],"target":[0,1],"pairing":[0,1],"trace":[{"kind":"Move3","j":1}]}"#
        );
        let back: AllowableFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<AllowableFunction>(
            r#"{"source":[0,1],"target":[0,1],"pairing":[0,0]}"#
        )
        .is_err());
    }
}
