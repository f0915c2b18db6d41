//! Weight diagrams: dominant weights recoordinatized as strictly increasing
//! integer sequences, plus the run structure and partial order on them.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Coefficients `μ₁ ≥ μ₂ ≥ … ≥ μₙ` of a dominant integral weight in the `ε_i` basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DominantWeight {
    coeffs: Vec<i64>,
}

impl DominantWeight {
    pub fn new(coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Empty);
        }
        if coeffs.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing(coeffs));
        }
        Ok(DominantWeight { coeffs })
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len()
    }
}

impl TryFrom<Vec<i64>> for DominantWeight {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        DominantWeight::new(v)
    }
}

impl From<DominantWeight> for Vec<i64> {
    fn from(w: DominantWeight) -> Vec<i64> {
        w.coeffs
    }
}

/// A weight diagram: `n ≥ 1` dots at strictly increasing integer positions.
///
/// Ordering is lexicographic on the dot positions, which is the canonical
/// ordering used for every serialized listing of summands.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct WeightDiagram {
    dots: Vec<i64>,
}

impl WeightDiagram {
    pub fn new(dots: Vec<i64>) -> Result<Self> {
        if dots.is_empty() {
            return Err(Error::Empty);
        }
        if dots.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotStrictlyIncreasing(dots));
        }
        Ok(WeightDiagram { dots })
    }

    /// Builds a diagram from dots in any order; duplicates are rejected.
    pub fn from_unsorted(mut dots: Vec<i64>) -> Result<Self> {
        dots.sort_unstable();
        WeightDiagram::new(dots)
    }

    pub fn dots(&self) -> &[i64] {
        &self.dots
    }

    pub fn len(&self) -> usize {
        self.dots.len()
    }

    /// Always false; diagrams carry at least one dot.
    pub fn is_empty(&self) -> bool {
        self.dots.is_empty()
    }

    pub fn min_dot(&self) -> i64 {
        self.dots[0]
    }

    pub fn max_dot(&self) -> i64 {
        self.dots[self.dots.len() - 1]
    }

    pub fn has_dot(&self, p: i64) -> bool {
        self.dots.binary_search(&p).is_ok()
    }

    /// Index of the dot at `p` in ascending order.
    pub fn index_of(&self, p: i64) -> Option<usize> {
        self.dots.binary_search(&p).ok()
    }

    /// `max − min`; zero for a single dot.
    pub fn span(&self) -> i64 {
        self.max_dot() - self.min_dot()
    }

    /// Number of dots at or left of `t`.
    pub fn count_at_or_below(&self, t: i64) -> usize {
        self.dots.partition_point(|&a| a <= t)
    }

    /// Moves the dot at `from` to the empty position `to`.
    pub fn move_dot(&self, from: i64, to: i64) -> Result<WeightDiagram> {
        let idx = self.index_of(from).ok_or(Error::NotADot(from))?;
        if self.has_dot(to) {
            return Err(Error::UnsupportedConfiguration(format!(
                "cannot move dot {from} onto occupied position {to} in {self}"
            )));
        }
        let mut dots = self.dots.clone();
        dots[idx] = to;
        WeightDiagram::from_unsorted(dots)
    }

    fn require_dot(&self, p: i64) -> Result<()> {
        if self.has_dot(p) {
            Ok(())
        } else {
            Err(Error::NotADot(p))
        }
    }

    /// Translation so that the leftmost dot sits at 0; returns the normal form
    /// and the offset `c` with `self = shift(normal, c)`.
    pub fn normalize(&self) -> (WeightDiagram, i64) {
        let c = self.min_dot();
        let dots = self.dots.iter().map(|&a| a - c).collect();
        (WeightDiagram { dots }, c)
    }

    /// ASCII picture: `o` for a dot, `.` for a tick, over the window
    /// `[min − 1, max + 1]`, followed by a ruler of last digits and the window bounds.
    pub fn render_ascii(&self) -> String {
        render_window(&[self], self.min_dot() - 1, self.max_dot() + 1)
    }
}

/// Renders several diagrams over one shared window, one line each, then a ruler.
pub fn render_window(rows: &[&WeightDiagram], lo: i64, hi: i64) -> String {
    let mut out = String::new();
    for d in rows {
        for x in lo..=hi {
            out.push(if d.has_dot(x) { 'o' } else { '.' });
        }
        out.push('\n');
    }
    for x in lo..=hi {
        let c = if x == 0 {
            '0'
        } else {
            char::from_digit((x.unsigned_abs() % 10) as u32, 10).unwrap_or('?')
        };
        out.push(c);
    }
    out.push('\n');
    out.push_str(&format!("[{lo}..{hi}]"));
    out
}

impl fmt::Display for WeightDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.dots.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// Parses a bracketed list of integers. Whitespace is ignored and the Unicode
/// minus sign is accepted alongside `-`.
pub fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let cleaned: String = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    let inner = cleaned
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .unwrap_or(&cleaned);
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(',')
        .map(|tok| {
            tok.parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad integer {tok:?}: {e}")))
        })
        .collect()
}

impl FromStr for WeightDiagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let dots = parse_int_list(s)?;
        WeightDiagram::new(dots).map_err(|e| match e {
            Error::Empty => Error::Parse("n ≥ 1 required".into()),
            other => Error::Parse(other.to_string()),
        })
    }
}

impl TryFrom<Vec<i64>> for WeightDiagram {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        WeightDiagram::new(v)
    }
}

impl From<WeightDiagram> for Vec<i64> {
    fn from(d: WeightDiagram) -> Vec<i64> {
        d.dots
    }
}

/// Run sizes of a diagram, listed from the rightmost run to the leftmost.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct RunComposition {
    parts: Vec<usize>,
}

impl RunComposition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        Ok(RunComposition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The total number of dots.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn odd_parts(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// A diagram with these run sizes, runs separated by `gap ≥ 1` empty
    /// positions and the leftmost dot at `start`.
    pub fn diagram(&self, start: i64, gap: i64) -> Result<WeightDiagram> {
        if gap < 1 {
            return Err(Error::Domain(format!("gap must be at least 1, got {gap}")));
        }
        let mut dots = Vec::with_capacity(self.total());
        let mut x = start;
        for (idx, &part) in self.parts.iter().rev().enumerate() {
            if idx > 0 {
                x = x.checked_add(gap).ok_or(Error::Overflow("diagram placement"))?;
            }
            for _ in 0..part {
                dots.push(x);
                x = x.checked_add(1).ok_or(Error::Overflow("diagram placement"))?;
            }
        }
        WeightDiagram::new(dots)
    }
}

impl fmt::Display for RunComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for RunComposition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && !matches!(c, '(' | ')' | '[' | ']'))
            .collect();
        if cleaned.is_empty() {
            return Err(Error::Parse("empty composition".into()));
        }
        let parts = cleaned
            .split(',')
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad part {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        RunComposition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl TryFrom<Vec<usize>> for RunComposition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        RunComposition::new(v)
    }
}

impl From<RunComposition> for Vec<usize> {
    fn from(c: RunComposition) -> Vec<usize> {
        c.parts
    }
}

/// `dots[k] = coeffs[n−1−k] + k`: add `ρ = Σ(n−i)ε_i` and reverse.
pub fn diagram_from_dominant(w: &DominantWeight) -> Result<WeightDiagram> {
    let n = w.rank();
    let dots = (0..n)
        .map(|k| {
            w.coeffs[n - 1 - k]
                .checked_add(k as i64)
                .ok_or(Error::Overflow("rho shift"))
        })
        .collect::<Result<Vec<_>>>()?;
    WeightDiagram::new(dots)
}

pub fn dominant_from_diagram(d: &WeightDiagram) -> DominantWeight {
    let n = d.len();
    let coeffs = (0..n).map(|i| d.dots[n - 1 - i] - (n - 1 - i) as i64).collect();
    DominantWeight { coeffs }
}

/// Sizes of maximal blocks of consecutive dots, right to left.
pub fn runs(d: &WeightDiagram) -> RunComposition {
    let mut parts = Vec::new();
    let mut current = 1;
    for w in d.dots.windows(2) {
        if w[1] == w[0] + 1 {
            current += 1;
        } else {
            parts.push(current);
            current = 1;
        }
    }
    parts.push(current);
    parts.reverse();
    RunComposition { parts }
}

/// Number of adjacent dot pairs; zero exactly when the diagram is typical.
pub fn atypicality(d: &WeightDiagram) -> usize {
    d.dots.windows(2).filter(|w| w[1] == w[0] + 1).count()
}

pub fn is_typical(d: &WeightDiagram) -> bool {
    atypicality(d) == 0
}

pub fn odd_run_count(d: &WeightDiagram) -> usize {
    runs(d).odd_parts()
}

pub fn is_isolated(d: &WeightDiagram, p: i64) -> Result<bool> {
    d.require_dot(p)?;
    Ok(!d.has_dot(p - 1) && !d.has_dot(p + 1))
}

pub fn is_left_isolated(d: &WeightDiagram, p: i64) -> Result<bool> {
    d.require_dot(p)?;
    Ok(!d.has_dot(p - 1))
}

fn check_sizes(a: &WeightDiagram, b: &WeightDiagram) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::SizeMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(())
}

/// `#{dots of λ ≤ t} − #{dots of μ ≤ t}`.
pub fn ell_t(lam: &WeightDiagram, mu: &WeightDiagram, t: i64) -> Result<i64> {
    check_sizes(lam, mu)?;
    Ok(lam.count_at_or_below(t) as i64 - mu.count_at_or_below(t) as i64)
}

/// Relative length `ℓ(λ, μ) = Σ_i (a_i − b_i)` with `μ = [a]`, `λ = [b]`.
pub fn ell(lam: &WeightDiagram, mu: &WeightDiagram) -> Result<i64> {
    check_sizes(lam, mu)?;
    mu.dots
        .iter()
        .zip(&lam.dots)
        .try_fold(0i64, |acc, (&a, &b)| {
            a.checked_sub(b)
                .and_then(|diff| acc.checked_add(diff))
                .ok_or(Error::Overflow("relative length"))
        })
}

/// Relative length as the sum of `ℓ_t` over the hull of both diagrams.
pub fn ell_summed(lam: &WeightDiagram, mu: &WeightDiagram) -> Result<i64> {
    check_sizes(lam, mu)?;
    let lo = lam.min_dot().min(mu.min_dot());
    let hi = lam.max_dot().max(mu.max_dot());
    let mut total = 0i64;
    for t in lo..=hi {
        total += ell_t(lam, mu, t)?;
    }
    Ok(total)
}

/// `μ ≤ λ`: every sorted coordinate of `λ` is at most the matching one of `μ`.
pub fn leq(mu: &WeightDiagram, lam: &WeightDiagram) -> Result<bool> {
    check_sizes(mu, lam)?;
    Ok(lam.dots.iter().zip(&mu.dots).all(|(b, a)| b <= a))
}

pub fn shift(d: &WeightDiagram, c: i64) -> Result<WeightDiagram> {
    let dots = d
        .dots
        .iter()
        .map(|&a| a.checked_add(c).ok_or(Error::Overflow("shift")))
        .collect::<Result<Vec<_>>>()?;
    Ok(WeightDiagram { dots })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wd(v: &[i64]) -> WeightDiagram {
        WeightDiagram::new(v.to_vec()).unwrap()
    }

    #[test]
    fn conversion_example() {
        let w = DominantWeight::new(vec![2, 2, 1, -4]).unwrap();
        let d = diagram_from_dominant(&w).unwrap();
        assert_eq!(d, wd(&[-4, 2, 4, 5]));
        assert_eq!(dominant_from_diagram(&d), w);
    }

    #[test]
    fn conversion_small_ranks() {
        let one = DominantWeight::new(vec![0]).unwrap();
        assert_eq!(diagram_from_dominant(&one).unwrap(), wd(&[0]));
        let two = DominantWeight::new(vec![0, 0]).unwrap();
        assert_eq!(diagram_from_dominant(&two).unwrap(), wd(&[0, 1]));
        assert_eq!(dominant_from_diagram(&wd(&[0])).coeffs(), &[0]);
        assert_eq!(dominant_from_diagram(&wd(&[0, 1])).coeffs(), &[0, 0]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(WeightDiagram::new(vec![]), Err(Error::Empty));
        assert!(WeightDiagram::new(vec![1, 1]).is_err());
        assert!(WeightDiagram::new(vec![2, 1]).is_err());
        assert!(DominantWeight::new(vec![0, 1]).is_err());
        assert!(RunComposition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn run_structure() {
        assert_eq!(runs(&wd(&[-4, 2, 4, 5])).parts(), &[2, 1, 1]);
        assert_eq!(runs(&wd(&[0, 2, 4])).parts(), &[1, 1, 1]);
        assert_eq!(runs(&wd(&[0, 1, 2, 3, 8, 9, 10, 11])).parts(), &[4, 4]);
        assert_eq!(runs(&wd(&[0, 1, 5])).parts(), &[1, 2]);

        assert_eq!(atypicality(&wd(&[0, 2, 4])), 0);
        assert_eq!(atypicality(&wd(&[-4, 2, 4, 5])), 1);
        assert_eq!(atypicality(&wd(&[0, 1, 2])), 2);

        assert_eq!(odd_run_count(&wd(&[-4, 2, 4, 5])), 2);
        assert_eq!(odd_run_count(&wd(&[0, 1])), 0);
        assert_eq!(odd_run_count(&wd(&[0, 1, 2])), 1);
    }

    #[test]
    fn isolation() {
        let d = wd(&[-4, 2, 4, 5]);
        assert!(is_isolated(&d, -4).unwrap());
        assert!(is_isolated(&d, 2).unwrap());
        assert!(is_left_isolated(&d, 4).unwrap());
        assert!(!is_isolated(&d, 4).unwrap());
        assert!(!is_left_isolated(&d, 5).unwrap());
        assert_eq!(is_isolated(&d, 3), Err(Error::NotADot(3)));
        assert_eq!(is_left_isolated(&d, 0), Err(Error::NotADot(0)));
    }

    #[test]
    fn relative_lengths() {
        assert_eq!(ell_t(&wd(&[-1, 0]), &wd(&[0, 1]), -1).unwrap(), 1);
        assert_eq!(
            ell_t(&wd(&[0, 1, 3, 5, 6]), &wd(&[3, 4, 5, 7, 8]), 2).unwrap(),
            2
        );
        let d = wd(&[-4, 2, 4, 5]);
        assert_eq!(ell_t(&d, &d, 3).unwrap(), 0);
        assert_eq!(ell(&d, &d).unwrap(), 0);

        let mu = wd(&[3, 4, 5, 7, 8]);
        let lam = wd(&[0, 1, 3, 5, 6]);
        assert_eq!(ell(&lam, &mu).unwrap(), 12);
        assert_eq!(ell_summed(&lam, &mu).unwrap(), 12);

        let mu = wd(&[0, 1, 2, 3, 8, 9, 10, 11]);
        let lam = wd(&[-4, -3, 0, 1, 4, 5, 8, 9]);
        assert_eq!(ell(&lam, &mu).unwrap(), 24);
        assert_eq!(ell_summed(&lam, &mu).unwrap(), 24);

        assert!(matches!(
            ell(&wd(&[0]), &wd(&[0, 1])),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn partial_order() {
        assert!(leq(&wd(&[0, 1]), &wd(&[-1, 0])).unwrap());
        assert!(leq(&wd(&[0, 1]), &wd(&[0, 1])).unwrap());
        assert!(!leq(&wd(&[0, 1]), &wd(&[0, 2])).unwrap());
    }

    #[test]
    fn shifting() {
        assert_eq!(shift(&wd(&[0, 1]), -1).unwrap(), wd(&[-1, 0]));
        assert_eq!(shift(&wd(&[-4, 2, 4, 5]), 4).unwrap(), wd(&[0, 6, 8, 9]));
        assert_eq!(shift(&wd(&[i64::MAX]), 1), Err(Error::Overflow("shift")));
        let (n, c) = wd(&[-4, 2, 4, 5]).normalize();
        assert_eq!(n, wd(&[0, 6, 8, 9]));
        assert_eq!(c, -4);
    }

    #[test]
    fn text_format() {
        let d: WeightDiagram = "[−4, 2,4,5]".parse().unwrap();
        assert_eq!(d, wd(&[-4, 2, 4, 5]));
        assert_eq!(d.to_string(), "[-4,2,4,5]");
        assert!("[1,1]".parse::<WeightDiagram>().is_err());
        assert!("[]".parse::<WeightDiagram>().is_err());
        assert!("[a]".parse::<WeightDiagram>().is_err());
        let c: RunComposition = "2,1,1".parse().unwrap();
        assert_eq!(c.parts(), &[2, 1, 1]);
        assert!("2,0".parse::<RunComposition>().is_err());
    }

    #[test]
    fn ascii_picture() {
        let pic = wd(&[-4, 2, 4, 5]).render_ascii();
        let first = pic.lines().next().unwrap();
        assert_eq!(first, ".o.....o.oo.");
        assert!(pic.ends_with("[-5..6]"));
    }

    #[test]
    fn composition_placement() {
        let c = RunComposition::new(vec![2, 1, 1]).unwrap();
        let d = c.diagram(0, 1).unwrap();
        assert_eq!(d, wd(&[0, 2, 4, 5]));
        assert_eq!(runs(&d), c);
    }
}
