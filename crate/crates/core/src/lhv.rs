//! Local hidden variable models with a finite hidden-variable index.
//!
//! Each party has two settings (primary and primed). For every hidden value
//! a party answers with outcome probabilities that are each in `[0, 1]` and
//! sum to at most 1; the missing mass is a non-detection. Joint
//! probabilities factorize per hidden value and are averaged with the model
//! weights.
//!
//! `S` is linear in each response row separately, so its maximum over all
//! models is reached at a deterministic strategy. [`classical_bound`]
//! enumerates those 256 strategies in integer arithmetic.

use std::fmt;

use rand::Rng;
use rand_distr::Exp1;

use crate::error::{Error, Result};
use crate::functional::AngleConfig;
use crate::sampling::seeded_rng;
use crate::spin::{outcome_distribution, Ket, Outcome};

/// Slack allowed on response sums and weight normalization.
pub const MODEL_TOL: f64 = 1e-12;

/// Which of a party's two analyzer settings is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Slot {
    Primary,
    Primed,
}

impl Slot {
    fn index(self) -> usize {
        match self {
            Slot::Primary => 0,
            Slot::Primed => 1,
        }
    }
}

/// Outcome probabilities of one party for both of its settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalResponse {
    probs: [[f64; 3]; 2],
}

impl LocalResponse {
    /// `primary` and `primed` are indexed `(+1, 0, -1)`.
    pub fn new(primary: [f64; 3], primed: [f64; 3]) -> Result<Self> {
        for row in [primary, primed] {
            check_row(&row, 1.0 + MODEL_TOL)?;
        }
        Ok(Self {
            probs: [primary, primed],
        })
    }

    pub fn prob(&self, slot: Slot, outcome: Outcome) -> f64 {
        self.probs[slot.index()][outcome.index()]
    }

    pub fn row(&self, slot: Slot) -> [f64; 3] {
        self.probs[slot.index()]
    }
}

fn check_row(row: &[f64; 3], cap: f64) -> Result<()> {
    if row
        .iter()
        .any(|p| !(p.is_finite() && (0.0..=1.0).contains(p)))
    {
        return Err(Error::InvalidModel(format!(
            "response probabilities {row:?} outside [0, 1]"
        )));
    }
    let total: f64 = row.iter().sum();
    if total > cap {
        return Err(Error::InvalidModel(format!(
            "response row {row:?} sums to {total} > {cap}"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LhvComponent {
    pub weight: f64,
    pub a: LocalResponse,
    pub b: LocalResponse,
}

/// Finite mixture of factorized local responses.
#[derive(Debug, Clone, PartialEq)]
pub struct LhvModel {
    components: Vec<LhvComponent>,
}

impl LhvModel {
    pub fn new(components: Vec<LhvComponent>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidModel("no components".into()));
        }
        if let Some(c) = components
            .iter()
            .find(|c| !(c.weight.is_finite() && c.weight >= 0.0))
        {
            return Err(Error::InvalidModel(format!(
                "weight {} is negative",
                c.weight
            )));
        }
        let total: f64 = components.iter().map(|c| c.weight).sum();
        if (total - 1.0).abs() > MODEL_TOL {
            return Err(Error::InvalidModel(format!(
                "weights sum to {total}, not 1"
            )));
        }
        Ok(Self { components })
    }

    pub fn components(&self) -> &[LhvComponent] {
        &self.components
    }

    /// The single-component model reproducing the quantum statistics of the
    /// product state `ket1 (x) ket2` at `angles`.
    pub fn from_product_kets(ket1: &Ket, ket2: &Ket, angles: &AngleConfig) -> Result<Self> {
        let a = LocalResponse::new(
            outcome_distribution(ket1, angles.beta1)?,
            outcome_distribution(ket1, angles.beta1_prime)?,
        )?;
        let b = LocalResponse::new(
            outcome_distribution(ket2, angles.beta2)?,
            outcome_distribution(ket2, angles.beta2_prime)?,
        )?;
        Self::new(vec![LhvComponent { weight: 1.0, a, b }])
    }
}

/// `sum_l w(l) p_m(slot_a, l) q_n(slot_b, l)`.
pub fn lhv_joint_prob(model: &LhvModel, slot_a: Slot, slot_b: Slot, m: Outcome, n: Outcome) -> f64 {
    model
        .components
        .iter()
        .map(|c| c.weight * c.a.prob(slot_a, m) * c.b.prob(slot_b, n))
        .sum::<f64>()
        .clamp(0.0, 1.0)
}

/// `S` assembled from model joint probabilities with the same term pattern
/// as the quantum functional.
pub fn lhv_s_value(model: &LhvModel) -> f64 {
    use Outcome::{Down, Up, Zero};
    use Slot::{Primary, Primed};
    let p = |sa, sb, m, n| lhv_joint_prob(model, sa, sb, m, n);
    let block: f64 = [(Zero, Zero), (Zero, Down), (Down, Zero), (Down, Down)]
        .into_iter()
        .map(|(m, n)| p(Primed, Primary, m, n))
        .sum();
    p(Primary, Primary, Up, Up) - p(Primary, Primed, Up, Up) + p(Primed, Primed, Up, Up) + block
}

/// A deterministic response for one setting: a fixed outcome or nothing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Response {
    Up,
    Zero,
    Down,
    NoDetect,
}

impl Response {
    /// Lexicographic symbol order used for enumeration and tie-breaking.
    pub const ALL: [Response; 4] = [
        Response::Up,
        Response::Zero,
        Response::Down,
        Response::NoDetect,
    ];

    pub fn outcome(self) -> Option<Outcome> {
        match self {
            Response::Up => Some(Outcome::Up),
            Response::Zero => Some(Outcome::Zero),
            Response::Down => Some(Outcome::Down),
            Response::NoDetect => None,
        }
    }

    fn row(self) -> [f64; 3] {
        let mut row = [0.0; 3];
        if let Some(o) = self.outcome() {
            row[o.index()] = 1.0;
        }
        row
    }
}

impl fmt::Display for Response {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.outcome() {
            Some(o) => o.fmt(f),
            None => f.pad("none"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeterministicStrategy {
    pub a_primary: Response,
    pub a_primed: Response,
    pub b_primary: Response,
    pub b_primed: Response,
}

impl DeterministicStrategy {
    /// `S` in integer arithmetic; every term is a product of 0/1 indicators.
    pub fn exact_s(&self) -> i32 {
        let up = |r: Response| i32::from(r == Response::Up);
        let low = |r: Response| i32::from(matches!(r, Response::Zero | Response::Down));
        up(self.a_primary) * up(self.b_primary) - up(self.a_primary) * up(self.b_primed)
            + up(self.a_primed) * up(self.b_primed)
            + low(self.a_primed) * low(self.b_primary)
    }

    pub fn to_model(&self) -> LhvModel {
        let a = LocalResponse::new(self.a_primary.row(), self.a_primed.row()).expect("vertex row");
        let b = LocalResponse::new(self.b_primary.row(), self.b_primed.row()).expect("vertex row");
        LhvModel::new(vec![LhvComponent { weight: 1.0, a, b }]).expect("unit weight")
    }
}

/// All `4^4` strategies in lexicographic order.
pub fn enumerate_deterministic() -> Vec<DeterministicStrategy> {
    let mut out = Vec::with_capacity(256);
    for a_primary in Response::ALL {
        for a_primed in Response::ALL {
            for b_primary in Response::ALL {
                for b_primed in Response::ALL {
                    out.push(DeterministicStrategy {
                        a_primary,
                        a_primed,
                        b_primary,
                        b_primed,
                    });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalBound {
    pub max_s: f64,
    pub exact_max: i32,
    pub argmax: DeterministicStrategy,
}

/// Maximum of `S` over all deterministic strategies; the first maximizer in
/// enumeration order wins ties.
pub fn classical_bound() -> ClassicalBound {
    let mut best: Option<(i32, DeterministicStrategy)> = None;
    for s in enumerate_deterministic() {
        let v = s.exact_s();
        if best.is_none_or(|(b, _)| v > b) {
            best = Some((v, s));
        }
    }
    let (exact_max, argmax) = best.expect("256 strategies");
    ClassicalBound {
        max_s: f64::from(exact_max),
        exact_max,
        argmax,
    }
}

/// Vertices of `{p in [0,1]^3 : p_1 + p_2 + p_3 <= cap}`.
///
/// `cap = 1` gives the four deterministic rows; larger caps describe
/// response sets that break the normalization constraint.
pub fn response_vertices(cap: f64) -> Result<Vec<[f64; 3]>> {
    if !(cap.is_finite() && cap >= 0.0) {
        return Err(Error::InvalidArgument(format!(
            "response cap {cap} must be >= 0"
        )));
    }
    // 0 = at lower bound, 1 = at upper bound, 2 = pinned by the sum constraint
    let mut out: Vec<[f64; 3]> = Vec::new();
    for code in 0..27u32 {
        let kinds = [code % 3, (code / 3) % 3, code / 9];
        let free = kinds.iter().filter(|&&k| k == 2).count();
        if free > 1 {
            continue;
        }
        let fixed: f64 = kinds.iter().map(|&k| if k == 1 { 1.0 } else { 0.0 }).sum();
        let mut row = kinds.map(|k| if k == 1 { 1.0 } else { 0.0 });
        if free == 1 {
            let v = cap - fixed;
            if !(0.0..=1.0).contains(&v) {
                continue;
            }
            let i = kinds.iter().position(|&k| k == 2).expect("one free slot");
            row[i] = v;
        } else if fixed > cap {
            continue;
        }
        if !out.contains(&row) {
            out.push(row);
        }
    }
    Ok(out)
}

fn s_from_rows(
    a_primary: &[f64; 3],
    a_primed: &[f64; 3],
    b_primary: &[f64; 3],
    b_primed: &[f64; 3],
) -> f64 {
    let low = |r: &[f64; 3]| r[1] + r[2];
    a_primary[0] * b_primary[0] - a_primary[0] * b_primed[0]
        + a_primed[0] * b_primed[0]
        + low(a_primed) * low(b_primary)
}

/// Maximum of `S` when every response row may sum to `cap` instead of 1,
/// with the maximizing rows `[a_primary, a_primed, b_primary, b_primed]`.
pub fn relaxed_vertex_bound(cap: f64) -> Result<(f64, [[f64; 3]; 4])> {
    let v = response_vertices(cap)?;
    let mut best = (f64::NEG_INFINITY, [[0.0; 3]; 4]);
    for ap in &v {
        for apr in &v {
            for bp in &v {
                for bpr in &v {
                    let s = s_from_rows(ap, apr, bp, bpr);
                    if s > best.0 {
                        best = (s, [*ap, *apr, *bp, *bpr]);
                    }
                }
            }
        }
    }
    Ok(best)
}

/// Reproducible random model: Dirichlet weights and response rows drawn
/// uniformly from the simplex with a non-detection slack coordinate.
pub fn random_lhv_model(seed: u64, n_components: usize) -> Result<LhvModel> {
    if n_components == 0 {
        return Err(Error::InvalidArgument("n_components must be >= 1".into()));
    }
    let mut rng = seeded_rng(seed);
    let row = |rng: &mut crate::sampling::SeededRng| {
        let e: [f64; 4] = [(); 4].map(|_| rng.sample(Exp1));
        let total: f64 = e.iter().sum();
        [e[0] / total, e[1] / total, e[2] / total]
    };
    let mut raw = Vec::with_capacity(n_components);
    for _ in 0..n_components {
        let w: f64 = rng.sample(Exp1);
        let a = LocalResponse::new(row(&mut rng), row(&mut rng))?;
        let b = LocalResponse::new(row(&mut rng), row(&mut rng))?;
        raw.push(LhvComponent { weight: w, a, b });
    }
    let total: f64 = raw.iter().map(|c| c.weight).sum();
    for c in &mut raw {
        c.weight /= total;
    }
    LhvModel::new(raw)
}
