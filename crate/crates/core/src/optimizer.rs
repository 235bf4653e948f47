//! Optimal restricted two-center of a fixed pair: narrow the search interval
//! with structural candidate radii, then binary search a finite set of
//! critical radii with the decision procedure.

use crate::decision::{Decider, DecisionResult};
use crate::error::{Error, Result};
use crate::geometry::Point2;
use crate::hull::ChainPair;

/// Half-open radius interval `(lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RadiusInterval {
    pub lo: f64,
    pub hi: f64,
}

impl RadiusInterval {
    pub fn new(lo: f64, hi: f64) -> Self {
        RadiusInterval { lo, hi }
    }

    pub fn contains(&self, r: f64) -> bool {
        self.lo < r && r <= self.hi
    }
}

/// Where a critical radius came from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Provenance {
    /// Smallest disk around chain `t` and two interior points (indices into
    /// the hull's point list).
    Pair { t: u8, q1: usize, q2: usize },
    /// A structural candidate used to narrow the interval.
    Structure,
    /// The interval's upper end.
    Endpoint,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CriticalRadius {
    pub value: f64,
    pub provenance: Provenance,
}

/// Sorted candidate radii inside an interval, always including its upper end.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalRadiusSet {
    pub values: Vec<CriticalRadius>,
}

impl CriticalRadiusSet {
    /// Sorts, clips to `iv` and merges values closer than `1e-12` (relative),
    /// then makes sure `iv.hi` is present.
    pub fn new(mut values: Vec<CriticalRadius>, iv: RadiusInterval) -> Self {
        values.retain(|c| iv.contains(c.value));
        values.push(CriticalRadius { value: iv.hi, provenance: Provenance::Endpoint });
        values.sort_by(|a, b| a.value.total_cmp(&b.value));
        values.dedup_by(|b, a| (b.value - a.value).abs() <= 1e-12 * a.value.abs().max(1.0));
        CriticalRadiusSet { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Optimal radius of one pair together with the witness decision.
#[derive(Clone, Debug, PartialEq)]
pub struct PairOptimum {
    pub pair: ChainPair,
    pub radius: f64,
    pub c1: Point2,
    pub c2: Point2,
    pub decision: DecisionResult,
}

/// Index of the smallest feasible value in `values` (ascending), given that
/// the last one is feasible.
fn smallest_feasible<F>(values: &[f64], mut feasible: F) -> Result<usize>
where
    F: FnMut(f64) -> Result<bool>,
{
    let (mut lo, mut hi) = (0usize, values.len() - 1);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if feasible(values[mid])? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(hi)
}

/// Structural candidate radii of a pair: radii of two and three chain
/// extremes, of each chain with one interior point, and of each chain
/// extreme with one interior point.
fn structural_candidates(d: &Decider, pair: ChainPair) -> Result<Vec<f64>> {
    let (q1, q2) = d.sides(pair)?;
    let qi = d.hull().interior_indices();
    let mut out = Vec::new();
    for side in [&q1, &q2] {
        for a in 0..side.len() {
            for b in (a + 1)..side.len() {
                out.push(d.one_center_of(&[side[a], side[b]])?.radius);
                for c in (b + 1)..side.len() {
                    out.push(d.one_center_of(&[side[a], side[b], side[c]])?.radius);
                }
            }
        }
        for &q in qi {
            let mut g = side.clone();
            g.push(q);
            out.push(d.one_center_of(&g)?.radius);
            for &s in side.iter() {
                out.push(d.one_center_of(&[s, q])?.radius);
            }
        }
    }
    Ok(out)
}

/// Narrows `iv` to the pair of consecutive structural candidates that
/// brackets the pair's optimum.
pub fn narrow_interval(d: &Decider, pair: ChainPair, iv: RadiusInterval) -> Result<RadiusInterval> {
    if !d.decide(pair, iv.hi)?.feasible {
        return Err(Error::InfeasibleInterval { hi: iv.hi });
    }
    let mut cands: Vec<f64> = structural_candidates(d, pair)?.into_iter().filter(|&r| iv.contains(r)).collect();
    cands.push(iv.hi);
    cands.sort_by(f64::total_cmp);
    cands.dedup();
    let k = smallest_feasible(&cands, |r| Ok(d.decide(pair, r)?.feasible))?;
    let lo = if k == 0 { iv.lo } else { cands[k - 1] };
    Ok(RadiusInterval { lo, hi: cands[k] })
}

/// Radius of the smallest disk containing chain `t` and the interior points
/// `q1`, `q2`, provided both interior points and some chain point lie on
/// its boundary and the radius falls in `iv`.
pub fn pair_coincidence_radius(
    d: &Decider,
    pair: ChainPair,
    t: u8,
    q1: usize,
    q2: usize,
    iv: RadiusInterval,
) -> Result<Option<f64>> {
    if q1 == q2 {
        return Ok(None);
    }
    let (s1, s2) = d.sides(pair)?;
    let chain = if t == 1 { s1 } else { s2 };
    let mut g = chain.clone();
    g.extend([q1, q2]);
    let oc = d.one_center_of(&g)?;
    let rho = oc.radius;
    if !iv.contains(rho) {
        return Ok(None);
    }
    let tol = 1e-7 * d.scale();
    let pts = d.hull().points();
    let on_rim = |q: usize| d.distance(oc.center, pts[q]).map(|x| (x - rho).abs() <= tol);
    if !on_rim(q1)? || !on_rim(q2)? {
        return Ok(None);
    }
    let mut far = 0.0f64;
    for &q in &chain {
        far = far.max(d.distance(oc.center, pts[q])?);
    }
    Ok(((far - rho).abs() <= tol).then_some(rho))
}

/// All critical radii of a pair inside `iv`.
pub fn critical_radii(d: &Decider, pair: ChainPair, iv: RadiusInterval) -> Result<CriticalRadiusSet> {
    let qi = d.hull().interior_indices();
    let mut values = Vec::new();
    for t in [1u8, 2] {
        for a in 0..qi.len() {
            for b in (a + 1)..qi.len() {
                if let Some(v) = pair_coincidence_radius(d, pair, t, qi[a], qi[b], iv)? {
                    values.push(CriticalRadius { value: v, provenance: Provenance::Pair { t, q1: qi[a], q2: qi[b] } });
                }
            }
        }
    }
    Ok(CriticalRadiusSet::new(values, iv))
}

/// Optimal restricted radius of `pair` and a witness, or `None` if the pair
/// cannot reach `iv.hi`.
pub fn optimize_pair(d: &Decider, pair: ChainPair, iv: RadiusInterval) -> Result<Option<PairOptimum>> {
    let narrowed = match narrow_interval(d, pair, iv) {
        Ok(n) => n,
        Err(Error::InfeasibleInterval { .. }) => return Ok(None),
        Err(e) => return Err(e),
    };
    let set = critical_radii(d, pair, narrowed)?;
    let values: Vec<f64> = set.values.iter().map(|c| c.value).collect();
    let k = smallest_feasible(&values, |r| Ok(d.decide(pair, r)?.feasible))?;
    let mut radius = values[k];
    let floor = if k == 0 { narrowed.lo } else { values[k - 1] };

    // Safety net: if the optimum is not among the candidates, bisect the
    // remaining gap down to the decision slack.
    let gap = 10.0 * d.slack();
    if radius - gap > floor && d.decide(pair, radius - gap)?.feasible {
        log::debug!("pair {pair:?}: optimum below every critical radius; bisecting");
        let (mut lo, mut hi) = (floor, radius - gap);
        while hi - lo > d.slack() {
            let mid = 0.5 * (lo + hi);
            if d.decide(pair, mid)?.feasible {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        radius = hi;
    }
    let decision = d.decide(pair, radius)?;
    let Some((c1, c2)) = decision.centers else {
        return Err(Error::InfeasibleInterval { hi: radius });
    };
    Ok(Some(PairOptimum { pair, radius, c1, c2, decision }))
}
