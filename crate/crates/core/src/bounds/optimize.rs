//! Minimizing α + Σ_{i≥1} a_i / α^(i−1) over the convergence domain.

use serde::Serialize;

use super::BoundError;

/// One closed-form family of coefficients a_i.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesTerm {
    /// a_1 = c, a_i = 0 afterwards.
    Constant(f64),
    /// a_i = coef · scale^(i−1); sums to coef / (1 − scale/α).
    Geometric { coef: f64, scale: f64 },
    /// a_i = coef · i · scale^(i−1); sums to coef / (1 − scale/α)².
    WeightedGeometric { coef: f64, scale: f64 },
}

impl SeriesTerm {
    fn scale(&self) -> f64 {
        match *self {
            SeriesTerm::Constant(_) => 0.0,
            SeriesTerm::Geometric { scale, .. } | SeriesTerm::WeightedGeometric { scale, .. } => scale,
        }
    }

    fn sum(&self, alpha: f64) -> f64 {
        match *self {
            SeriesTerm::Constant(c) => c,
            SeriesTerm::Geometric { coef, scale } => coef / (1.0 - scale / alpha),
            SeriesTerm::WeightedGeometric { coef, scale } => {
                let q = 1.0 - scale / alpha;
                coef / (q * q)
            }
        }
    }

    pub fn coefficient(&self, i: u32) -> f64 {
        assert!(i >= 1);
        match *self {
            SeriesTerm::Constant(c) => {
                if i == 1 {
                    c
                } else {
                    0.0
                }
            }
            SeriesTerm::Geometric { coef, scale } => coef * scale.powi(i as i32 - 1),
            SeriesTerm::WeightedGeometric { coef, scale } => coef * i as f64 * scale.powi(i as i32 - 1),
        }
    }
}

/// The objective α ↦ α + S(α) with S a sum of closed-form terms.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeriesBound {
    pub terms: Vec<SeriesTerm>,
}

impl SeriesBound {
    pub fn new(terms: Vec<SeriesTerm>) -> Self {
        Self { terms }
    }

    /// Paths: a_i = 1, objective α + α/(α−1).
    pub fn path() -> Self {
        Self::new(vec![SeriesTerm::Geometric { coef: 1.0, scale: 1.0 }])
    }

    /// Weak total coloring per unit Δ: a_i = i, objective α + (α/(α−1))².
    pub fn weak_total() -> Self {
        Self::new(vec![SeriesTerm::WeightedGeometric { coef: 1.0, scale: 1.0 }])
    }

    /// Vertex choice at degree Δ: a_i = i·Δ·(Δ−1)^(2i−2).
    pub fn thue_choice(delta: u32) -> Self {
        let d = delta as f64;
        Self::new(vec![SeriesTerm::WeightedGeometric { coef: d, scale: (d - 1.0) * (d - 1.0) }])
    }

    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "path" => Some(Self::path()),
            "weak-total" | "weak_total" => Some(Self::weak_total()),
            _ => None,
        }
    }

    /// 1/r: the series converges for α strictly above this.
    pub fn domain_low(&self) -> f64 {
        self.terms.iter().map(SeriesTerm::scale).fold(0.0, f64::max)
    }

    /// S(α) in closed form.
    pub fn series_sum(&self, alpha: f64) -> f64 {
        self.terms.iter().map(|t| t.sum(alpha)).sum()
    }

    pub fn objective(&self, alpha: f64) -> f64 {
        alpha + self.series_sum(alpha)
    }

    pub fn coefficient(&self, i: u32) -> f64 {
        self.terms.iter().map(|t| t.coefficient(i)).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Optimum {
    pub alpha: f64,
    pub gamma: f64,
    /// False when the minimum sits at the lower edge of the domain.
    pub interior: bool,
    pub evaluations: usize,
}

/// Golden-section search over a doubling bracket.
#[derive(Debug, Clone, Copy)]
pub struct Optimizer {
    pub tol: f64,
    pub initial_step: f64,
    pub max_alpha: f64,
    /// Scan the bracket at 1000 points and reject non-unimodal objectives.
    pub check_unimodal: bool,
}

impl Default for Optimizer {
    fn default() -> Self {
        Self {
            tol: 1e-9,
            initial_step: 1.0,
            max_alpha: 1e12,
            check_unimodal: cfg!(debug_assertions),
        }
    }
}

const INV_PHI: f64 = 0.618_033_988_749_894_9;

impl Optimizer {
    pub fn with_tol(tol: f64) -> Self {
        Self { tol, ..Self::default() }
    }

    pub fn minimize(&self, series: &SeriesBound) -> Result<Optimum, BoundError> {
        let f = |a: f64| series.objective(a);
        let mut evals = 0usize;
        let mut eval = |a: f64| {
            evals += 1;
            f(a)
        };

        let lo = series.domain_low() + self.tol;
        let f_lo = eval(lo);
        let mut step = self.initial_step;
        let (mut left, mut mid) = (lo, lo + step);
        let mut f_mid = eval(mid);
        let right = if f_mid >= f_lo {
            mid
        } else {
            loop {
                step *= 2.0;
                let next = mid + step;
                if next > self.max_alpha {
                    return Err(BoundError::NoBracket(self.max_alpha));
                }
                let f_next = eval(next);
                if f_next >= f_mid {
                    break next;
                }
                left = mid;
                mid = next;
                f_mid = f_next;
            }
        };

        if self.check_unimodal && !is_unimodal(&f, left, right, 1000) {
            return Err(BoundError::NotUnimodal(left, right));
        }

        let (mut a, mut b) = (left, right);
        let mut c = b - INV_PHI * (b - a);
        let mut d = a + INV_PHI * (b - a);
        let (mut fc, mut fd) = (eval(c), eval(d));
        while b - a > self.tol {
            if fc <= fd {
                b = d;
                d = c;
                fd = fc;
                c = b - INV_PHI * (b - a);
                fc = eval(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + INV_PHI * (b - a);
                fd = eval(d);
            }
        }
        let alpha = 0.5 * (a + b);
        let gamma = eval(alpha);
        Ok(Optimum {
            alpha,
            gamma,
            interior: alpha - lo > 2.0 * self.tol,
            evaluations: evals,
        })
    }
}

/// Minimizes with default bracketing and the given tolerance.
pub fn optimize(series: &SeriesBound, tol: f64) -> Result<Optimum, BoundError> {
    Optimizer::with_tol(tol).minimize(series)
}

/// Samples `n` points of `[a, b]` and checks the values fall then rise,
/// allowing relative noise of 1e-12.
fn is_unimodal(f: &impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> bool {
    let ys: Vec<f64> = (0..n)
        .map(|k| f(a + (b - a) * k as f64 / (n - 1) as f64))
        .collect();
    let argmin = ys
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(y.1))
        .map(|(k, _)| k)
        .unwrap();
    let slack = |y: f64| 1e-12 * y.abs().max(1.0);
    ys[..=argmin].windows(2).all(|w| w[1] <= w[0] + slack(w[0]))
        && ys[argmin..].windows(2).all(|w| w[1] + slack(w[1]) >= w[0])
}
