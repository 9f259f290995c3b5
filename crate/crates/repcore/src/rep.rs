use cyclo::text::parse_elem;
use cyclo::{FieldCtx, FieldElem, Matrix};
use serde_json::{json, Value};

use crate::RepError;

/// Which algebra the generator matrices represent.
///
/// `U` is `Ū` with generators `E, F, K, K⁻¹`; `D` is the double cover `D̄`
/// with generators `e, f, t, t⁻¹`, where `t²` plays the role of `K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algebra {
    U,
    D,
}

impl Algebra {
    pub fn generator_names(self) -> [&'static str; 4] {
        match self {
            Algebra::U => ["E", "F", "K", "Kinv"],
            Algebra::D => ["e", "f", "t", "tinv"],
        }
    }
}

/// A finite-dimensional module given by its generator matrices.
#[derive(Clone)]
pub struct Rep {
    ctx: &'static FieldCtx,
    algebra: Algebra,
    e: Matrix,
    f: Matrix,
    k: Matrix,
    kinv: Matrix,
    label: Option<String>,
}

impl Rep {
    /// Builds a Rep from `E, F, K`; `K⁻¹` is computed.
    pub fn new(algebra: Algebra, e: Matrix, f: Matrix, k: Matrix) -> Result<Rep, RepError> {
        let kinv = k.inverse().map_err(|_| RepError::Relation(format!("{} is not invertible", algebra.generator_names()[2])))?;
        Rep::with_inverse(algebra, e, f, k, kinv)
    }

    /// Builds a Rep from all four generator matrices, checking shapes and
    /// `K·K⁻¹ = 1` but no other relation.
    pub fn with_inverse(algebra: Algebra, e: Matrix, f: Matrix, k: Matrix, kinv: Matrix) -> Result<Rep, RepError> {
        let ctx = e.ctx();
        let n = e.rows();
        for m in [&e, &f, &k, &kinv] {
            if m.rows() != n || m.cols() != n {
                return Err(RepError::Mismatch("generator matrices must be square of equal size".into()));
            }
            if !std::ptr::eq(m.ctx(), ctx) {
                return Err(RepError::Mismatch("generator matrices over different fields".into()));
            }
        }
        if n > 0 && &k * &kinv != Matrix::identity(ctx, n) {
            return Err(RepError::Relation(format!("{}·{} = 1", algebra.generator_names()[2], algebra.generator_names()[3])));
        }
        Ok(Rep { ctx, algebra, e, f, k, kinv, label: None })
    }

    /// The zero module.
    pub fn zero(ctx: &'static FieldCtx, algebra: Algebra) -> Rep {
        let z = Matrix::zeros(ctx, 0, 0);
        Rep { ctx, algebra, e: z.clone(), f: z.clone(), k: z.clone(), kinv: z, label: None }
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Rep {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn ctx(&self) -> &'static FieldCtx {
        self.ctx
    }

    pub fn p(&self) -> u32 {
        self.ctx.p()
    }

    pub fn algebra(&self) -> Algebra {
        self.algebra
    }

    pub fn dim(&self) -> usize {
        self.e.rows()
    }

    pub fn e(&self) -> &Matrix {
        &self.e
    }

    pub fn f(&self) -> &Matrix {
        &self.f
    }

    pub fn k(&self) -> &Matrix {
        &self.k
    }

    pub fn kinv(&self) -> &Matrix {
        &self.kinv
    }

    /// `E, F, K, K⁻¹` in that order.
    pub fn generators(&self) -> [&Matrix; 4] {
        [&self.e, &self.f, &self.k, &self.kinv]
    }

    /// The matrix by which the Cartan element of `Ū` acts: `K` on a `Ū`-Rep
    /// and `t²` on a `D̄`-Rep.
    pub fn cartan_u(&self) -> Matrix {
        match self.algebra {
            Algebra::U => self.k.clone(),
            Algebra::D => &self.k * &self.k,
        }
    }

    /// Pulls a `D̄`-Rep back along `E ↦ e, F ↦ f, K ↦ t²`; identity on
    /// `Ū`-Reps.
    pub fn restrict_to_u(&self) -> Rep {
        match self.algebra {
            Algebra::U => self.clone(),
            Algebra::D => Rep {
                ctx: self.ctx,
                algebra: Algebra::U,
                e: self.e.clone(),
                f: self.f.clone(),
                k: &self.k * &self.k,
                kinv: &self.kinv * &self.kinv,
                label: self.label.clone(),
            },
        }
    }

    /// Diagonal of `K` (or `t`) if that matrix is diagonal.
    pub fn k_diagonal(&self) -> Option<Vec<FieldElem>> {
        let n = self.dim();
        for i in 0..n {
            if self.k.row_entries(i).any(|(j, _)| j != i) {
                return None;
            }
        }
        Some((0..n).map(|i| self.k.get(i, i).clone()).collect())
    }

    /// Checks every defining relation as an exact matrix identity and
    /// reports the first one that fails, by name.
    pub fn validate(&self) -> Result<(), RepError> {
        let n = self.dim();
        let ctx = self.ctx;
        let p = ctx.p();
        let id = Matrix::identity(ctx, n);
        let zero = Matrix::zeros(ctx, n, n);
        let (e, f, k, ki) = (&self.e, &self.f, &self.k, &self.kinv);
        let fail = |name: &str| Err(RepError::Relation(name.to_string()));
        let names = self.algebra.generator_names();
        if &(k * ki) != &id || &(ki * k) != &id {
            return fail(&format!("{}{} = 1", names[2], names[3]));
        }
        // conjugation scalar and the element K_u playing K in [E,F]
        let (conj, ku, kui, order, rel_names) = match self.algebra {
            Algebra::U => (
                ctx.q_power(2),
                k.clone(),
                ki.clone(),
                2 * p,
                ["KEK^-1 = q^2 E", "KFK^-1 = q^-2 F", "EF - FE = (K - K^-1)/(q - q^-1)", "K^2p = 1", "E^p = 0", "F^p = 0"],
            ),
            Algebra::D => (
                ctx.q(),
                k * k,
                ki * ki,
                4 * p,
                ["tet^-1 = q e", "tft^-1 = q^-1 f", "ef - fe = (t^2 - t^-2)/(q - q^-1)", "t^4p = 1", "e^p = 0", "f^p = 0"],
            ),
        };
        if &(&(k * e) * ki) != &e.scale(&conj) {
            return fail(rel_names[0]);
        }
        if &(&(k * f) * ki) != &f.scale(&conj.inv()?) {
            return fail(rel_names[1]);
        }
        let q = ctx.q();
        let den = (&q - &q.inv()?).inv()?;
        if &(&(e * f) - &(f * e)) != &(&ku - &kui).scale(&den) {
            return fail(rel_names[2]);
        }
        if k.pow(order) != id {
            return fail(rel_names[3]);
        }
        if e.pow(p) != zero {
            return fail(rel_names[4]);
        }
        if f.pow(p) != zero {
            return fail(rel_names[5]);
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let mat = |m: &Matrix| -> Value {
            Value::Array(
                (0..m.rows())
                    .map(|i| Value::Array(m.row(i).iter().map(|x| Value::String(x.to_string())).collect()))
                    .collect(),
            )
        };
        let names = self.algebra.generator_names();
        let mut v = json!({
            "algebra": match self.algebra { Algebra::U => "U", Algebra::D => "D" },
            "p": self.p(),
            "dim": self.dim(),
            "label": self.label,
        });
        for (name, m) in names.iter().zip(self.generators()) {
            v[*name] = mat(m);
        }
        v
    }

    pub fn from_json(v: &Value) -> Result<Rep, RepError> {
        let bad = |why: &str| RepError::Json(why.to_string());
        let p = v["p"].as_u64().ok_or_else(|| bad("missing p"))? as u32;
        let ctx = FieldCtx::get(p)?;
        let algebra = match v["algebra"].as_str() {
            Some("U") => Algebra::U,
            Some("D") => Algebra::D,
            _ => return Err(bad("algebra must be \"U\" or \"D\"")),
        };
        let dim = v["dim"].as_u64().ok_or_else(|| bad("missing dim"))? as usize;
        let names = algebra.generator_names();
        let mut mats = Vec::new();
        for name in names {
            let rows = v[name].as_array().ok_or_else(|| bad(&format!("missing matrix {name}")))?;
            if rows.len() != dim {
                return Err(bad(&format!("matrix {name} has {} rows, expected {dim}", rows.len())));
            }
            let mut m = Matrix::zeros(ctx, dim, dim);
            for (i, row) in rows.iter().enumerate() {
                let row = row.as_array().filter(|r| r.len() == dim).ok_or_else(|| bad("ragged matrix"))?;
                for (j, x) in row.iter().enumerate() {
                    let s = x.as_str().ok_or_else(|| bad("matrix entries must be strings"))?;
                    m.set(i, j, parse_elem(s, ctx)?);
                }
            }
            mats.push(m);
        }
        let kinv = mats.pop().expect("four matrices");
        let k = mats.pop().expect("four matrices");
        let f = mats.pop().expect("four matrices");
        let e = mats.pop().expect("four matrices");
        let mut rep = Rep::with_inverse(algebra, e, f, k, kinv)?;
        rep.label = v["label"].as_str().map(str::to_string);
        Ok(rep)
    }
}

impl PartialEq for Rep {
    /// Matrix-for-matrix equality; labels are ignored.
    fn eq(&self, other: &Rep) -> bool {
        self.algebra == other.algebra && self.e == other.e && self.f == other.f && self.k == other.k
    }
}

impl std::fmt::Debug for Rep {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Rep({:?}, dim {}, {})", self.algebra, self.dim(), self.label.as_deref().unwrap_or("unlabeled"))
    }
}
