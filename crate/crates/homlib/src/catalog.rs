//! Simple and projective modules for a fixed `p`, built once and shared.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use cyclo::{FieldCtx, FieldElem};
use repcore::{build_p, build_simple, ModuleLabel, Rep, Sign};

use crate::hom::hom_space;
use crate::HomError;

/// A projective indecomposable `P(S)` with a weight vector generating it.
#[derive(Clone, Debug)]
pub struct Projective {
    pub label: ModuleLabel,
    pub simple: ModuleLabel,
    pub rep: Rep,
    pub generator: Vec<FieldElem>,
}

#[derive(Debug)]
pub struct Catalog {
    pub p: u32,
    /// `X_s^±` for `s = 1..=p`, plus before minus.
    pub simples: Vec<(ModuleLabel, Rep)>,
    /// `P(X_s^±)` in the same order; `P(X_p^±) = X_p^±`.
    pub projectives: Vec<Projective>,
}

impl Catalog {
    pub fn simple(&self, label: &ModuleLabel) -> Option<&Rep> {
        self.simples.iter().find(|(l, _)| l == label).map(|(_, r)| r)
    }

    pub fn projective_of(&self, simple: &ModuleLabel) -> Option<&Projective> {
        self.projectives.iter().find(|p| &p.simple == simple)
    }
}

fn build_catalog(ctx: &'static FieldCtx) -> Result<Catalog, HomError> {
    let p = ctx.p();
    let mut simples = Vec::new();
    let mut projectives = Vec::new();
    for sign in [Sign::Plus, Sign::Minus] {
        for s in 1..=p {
            simples.push((ModuleLabel::x(sign, s), build_simple(ctx, s, sign)?));
        }
    }
    for (slabel, simple) in &simples {
        let rep = build_p(ctx, slabel.s, slabel.sign)?;
        let label = ModuleLabel::p(slabel.sign, slabel.s).canonical(p)?;
        // P(S) is generated by any vector mapping onto the highest weight
        // vector of its top; test the candidates of that weight directly
        let hw = simple.k().get(0, 0).clone();
        let tops = hom_space(&rep, simple)?;
        let diag = rep.k_diagonal().expect("projectives are built with diagonal K");
        let generator = (0..rep.dim())
            .filter(|&i| diag[i] == hw)
            .find(|&i| tops.basis.iter().any(|h| !h.get(0, i).is_zero()))
            .map(|i| {
                let mut v = vec![ctx.zero(); rep.dim()];
                v[i] = ctx.one();
                v
            })
            .ok_or_else(|| crate::internal("catalog", format!("no generator found for {label}")))?;
        projectives.push(Projective { label, simple: slabel.clone(), rep, generator });
    }
    Ok(Catalog { p, simples, projectives })
}

/// The catalog for the field of `ctx`, computed on first use.
pub fn catalog(ctx: &'static FieldCtx) -> Result<&'static Catalog, HomError> {
    static CACHE: OnceLock<Mutex<HashMap<u32, &'static Catalog>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().expect("catalog cache").get(&ctx.p()) {
        return Ok(c);
    }
    let built: &'static Catalog = Box::leak(Box::new(build_catalog(ctx)?));
    let mut guard = cache.lock().expect("catalog cache");
    Ok(*guard.entry(ctx.p()).or_insert(built))
}
