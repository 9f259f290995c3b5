//! Isomorphism tests with checkable certificates.

use std::fmt;

use cyclo::Matrix;
use repcore::ops::intertwines;
use repcore::{build, ModuleLabel, ProjLinePoint, Rep, Sign};

use crate::catalog::catalog;
use crate::decompose::{decompose_full, Decomposition};
use crate::hom::{find_invertible, hom_dim, hom_space};
use crate::HomError;

/// Seed of the pseudo-random stage of invertible-element searches.
pub const DEFAULT_SEED: u64 = 0x5eed_2017;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `dim Hom(C, ·)`
    From,
    /// `dim Hom(·, C)`
    Into,
}

/// A test module `C` (or the plain dimension) telling `A` and `B` apart.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    /// Label of `C`, or `"dimension"`.
    pub test: String,
    pub direction: Direction,
    pub left: usize,
    pub right: usize,
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.test.as_str(), self.direction) {
            ("dimension", _) => write!(f, "dim {} != {}", self.left, self.right),
            (c, Direction::From) => write!(f, "dim Hom({c}, A) = {} but dim Hom({c}, B) = {}", self.left, self.right),
            (c, Direction::Into) => write!(f, "dim Hom(A, {c}) = {} but dim Hom(B, {c}) = {}", self.left, self.right),
        }
    }
}

#[derive(Clone, Debug)]
pub enum IsoCertificate {
    /// An invertible intertwiner `A → B`.
    Iso(Matrix),
    NotIso(Fingerprint),
    /// The search bound was reached without a verdict.
    Undetermined,
}

impl IsoCertificate {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoCertificate::Iso(_))
    }

    pub fn is_not_iso(&self) -> bool {
        matches!(self, IsoCertificate::NotIso(_))
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            IsoCertificate::Iso(_) => "iso",
            IsoCertificate::NotIso(_) => "not-iso",
            IsoCertificate::Undetermined => "undetermined",
        }
    }

    /// Re-checks the witness from scratch.
    pub fn verify(&self, a: &Rep, b: &Rep) -> Result<bool, HomError> {
        match self {
            IsoCertificate::Iso(t) => Ok(t.rows() == b.dim()
                && t.cols() == a.dim()
                && intertwines(a, b, t)
                && (a.dim() == 0 || !t.det().is_zero())),
            IsoCertificate::NotIso(fp) => {
                if fp.test == "dimension" {
                    return Ok(a.dim() == fp.left && b.dim() == fp.right && fp.left != fp.right);
                }
                let c = build(a.ctx(), &ModuleLabel::parse(&fp.test, a.ctx())?)?;
                let (l, r) = match fp.direction {
                    Direction::From => (hom_dim(&c, a)?, hom_dim(&c, b)?),
                    Direction::Into => (hom_dim(a, &c)?, hom_dim(b, &c)?),
                };
                Ok(l == fp.left && r == fp.right && l != r)
            }
            IsoCertificate::Undetermined => Ok(false),
        }
    }
}

#[derive(Clone, Debug)]
pub struct IsoOptions {
    pub seed: u64,
    /// Additional test modules for fingerprints, tried after the standard set.
    pub extra_tests: Vec<ModuleLabel>,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions { seed: DEFAULT_SEED, extra_tests: Vec::new() }
    }
}

fn fingerprint(a: &Rep, b: &Rep, label: &ModuleLabel, c: &Rep) -> Result<Option<Fingerprint>, HomError> {
    for direction in [Direction::From, Direction::Into] {
        let (l, r) = match direction {
            Direction::From => (hom_dim(c, a)?, hom_dim(c, b)?),
            Direction::Into => (hom_dim(a, c)?, hom_dim(b, c)?),
        };
        if l != r {
            return Ok(Some(Fingerprint { test: label.to_string(), direction, left: l, right: r }));
        }
    }
    Ok(None)
}

pub fn is_iso(a: &Rep, b: &Rep) -> Result<IsoCertificate, HomError> {
    is_iso_with(a, b, &IsoOptions::default())
}

/// Dimension, then Hom fingerprints against simples and projectives, then
/// a search for an invertible intertwiner. If the search fails, both sides
/// are decomposed: equal decompositions give an isomorphism through the
/// summand embeddings, different ones are separated by fingerprints
/// against `E_t^±(1;λ)` for the `λ` that occur and against the summands
/// themselves.
pub fn is_iso_with(a: &Rep, b: &Rep, opts: &IsoOptions) -> Result<IsoCertificate, HomError> {
    let ctx = a.ctx();
    let p = ctx.p();
    if a.dim() != b.dim() {
        return Ok(IsoCertificate::NotIso(Fingerprint {
            test: "dimension".into(),
            direction: Direction::From,
            left: a.dim(),
            right: b.dim(),
        }));
    }
    let cat = catalog(ctx)?;
    for (label, s) in &cat.simples {
        if let Some(fp) = fingerprint(a, b, label, s)? {
            return Ok(IsoCertificate::NotIso(fp));
        }
    }
    for proj in &cat.projectives {
        if proj.label.is_simple() {
            continue;
        }
        if let Some(fp) = fingerprint(a, b, &proj.label, &proj.rep)? {
            return Ok(IsoCertificate::NotIso(fp));
        }
    }
    let hom = hom_space(a, b)?;
    if let Some(t) = find_invertible(&hom, a, b, opts.seed) {
        return Ok(IsoCertificate::Iso(t));
    }
    let da = decompose_full(a)?;
    let db = decompose_full(b)?;
    if da.decomp == db.decomp {
        return Ok(match matched_iso(&da, &db) {
            Some(t) => IsoCertificate::Iso(t),
            None => IsoCertificate::Undetermined,
        });
    }
    let mut tests: Vec<ModuleLabel> = Vec::new();
    let mut lambdas: Vec<ProjLinePoint> = Vec::new();
    for (l, _) in da.decomp.summands().iter().chain(db.decomp.summands()) {
        if let Some(lam) = l.lambda() {
            if !lambdas.contains(lam) {
                lambdas.push(lam.clone());
            }
        }
    }
    for lam in &lambdas {
        for sign in [Sign::Plus, Sign::Minus] {
            for t in 1..p {
                tests.push(ModuleLabel::e(sign, t, 1, lam.clone()));
            }
        }
    }
    for (l, _) in da.decomp.summands().iter().chain(db.decomp.summands()) {
        tests.push(l.clone());
    }
    tests.extend(opts.extra_tests.iter().cloned());
    for label in tests {
        let c = build(ctx, &label)?;
        if let Some(fp) = fingerprint(a, b, &label.canonical(p)?, &c)? {
            return Ok(IsoCertificate::NotIso(fp));
        }
    }
    Ok(IsoCertificate::Undetermined)
}

/// `W_b ∘ W_a⁻¹` with the summands of `b` reordered to match those of `a`.
fn matched_iso(da: &Decomposition, db: &Decomposition) -> Option<Matrix> {
    let mut used = vec![false; db.pieces.len()];
    let wa = da.witness();
    let mut cols = Matrix::zeros(wa.ctx(), wa.rows(), 0);
    for pa in &da.pieces {
        let j = (0..db.pieces.len()).find(|&j| !used[j] && db.pieces[j].label == pa.label)?;
        used[j] = true;
        cols = cols.hcat(&db.pieces[j].embedding);
    }
    Some(&cols * &wa.inverse().ok()?)
}
