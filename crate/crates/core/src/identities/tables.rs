use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::algebra::{Field, XPoly};
use crate::families::{heat_rows, Family, FamilySpec, PolyTable};
use crate::Error;

type Rows<F> = Arc<Vec<XPoly<F>>>;
type Slot<F> = Arc<OnceLock<Result<Rows<F>, Error>>>;

/// Lazily built, shared family tables for one value of λ. Each table is
/// built once even under concurrent requests.
pub struct Tables<F> {
    lambda: F,
    rows: usize,
    precision: usize,
    cache: Mutex<HashMap<String, Slot<F>>>,
}

impl<F: Field> Tables<F> {
    /// Tables with rows `0..rows` for the parameter `lambda`.
    pub fn new(lambda: F, rows: usize, precision: usize) -> Self {
        Tables { lambda, rows, precision: precision.max(rows), cache: Mutex::new(HashMap::new()) }
    }

    pub fn lambda(&self) -> &F {
        &self.lambda
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    /// `λ^m`
    pub fn lambda_pow(&self, m: u32) -> F {
        self.lambda.pow(m)
    }

    fn get(&self, key: String, build: impl FnOnce() -> Result<Rows<F>, Error>) -> Result<Rows<F>, Error> {
        let slot = {
            let mut map = self.cache.lock().expect("table cache poisoned");
            map.entry(key).or_default().clone()
        };
        slot.get_or_init(build).clone()
    }

    fn build(&self, spec: FamilySpec<F>) -> Result<Rows<F>, Error> {
        Ok(Arc::new(PolyTable::build_with_precision(&spec, self.precision)?.rows))
    }

    fn spec(&self, family: Family) -> FamilySpec<F> {
        FamilySpec::new(family, self.rows - 1)
    }

    /// `G_n^{(l)}(x; λ^m)`
    pub fn genocchi(&self, l: u32, m: u32) -> Result<Rows<F>, Error> {
        self.get(format!("G|{l}|pow{m}"), || {
            if m != 1 && self.lambda.is_symbolic() {
                let base = self.genocchi(l, 1)?;
                return Ok(Arc::new(
                    base.iter().map(|r| r.map(|c| c.subst_lambda_power(m).expect("symbolic"))).collect(),
                ));
            }
            self.build(self.spec(Family::ApostolGenocchi).with_order(l).with_lambda(self.lambda_pow(m)))
        })
    }

    /// `G_n^{(l)}(x)`, the classical family at `λ = 1`.
    pub fn genocchi_one(&self, l: u32) -> Result<Rows<F>, Error> {
        self.get(format!("G|{l}|one"), || self.build(self.spec(Family::Genocchi).with_order(l)))
    }

    /// `B_n^{(l)}(x; λ^m)`
    pub fn bernoulli(&self, l: u32, m: u32) -> Result<Rows<F>, Error> {
        self.get(format!("B|{l}|pow{m}"), || {
            if m != 1 && self.lambda.is_symbolic() {
                let base = self.bernoulli(l, 1)?;
                return Ok(Arc::new(
                    base.iter().map(|r| r.map(|c| c.subst_lambda_power(m).expect("symbolic"))).collect(),
                ));
            }
            self.build(self.spec(Family::ApostolBernoulli).with_order(l).with_lambda(self.lambda_pow(m)))
        })
    }

    /// `B_n^{(l)}(x)`
    pub fn bernoulli_one(&self, l: u32) -> Result<Rows<F>, Error> {
        self.get(format!("B|{l}|one"), || self.build(self.spec(Family::Bernoulli).with_order(l)))
    }

    /// `E_n^{(l)}(x)`
    pub fn euler(&self, l: u32) -> Result<Rows<F>, Error> {
        self.get(format!("E|{l}"), || self.build(self.spec(Family::Euler).with_order(l)))
    }

    /// `G_n^{(l)}(x; a, b, c; λ)`
    pub fn abc(&self, l: u32, la: &F, lb: &F, lc: &F) -> Result<Rows<F>, Error> {
        self.get(format!("abc|{l}|{la}|{lb}|{lc}"), || {
            let spec = self.spec(Family::GenocchiAbc).with_order(l).with_lambda(self.lambda.clone()).with_logs(
                la.clone(),
                lb.clone(),
                lc.clone(),
            );
            self.build(spec)
        })
    }

    /// `B_n(x; a, b, c)`
    pub fn luo_bernoulli(&self, la: &F, lb: &F, lc: &F) -> Result<Rows<F>, Error> {
        self.get(format!("luoB|{la}|{lb}|{lc}"), || {
            self.build(self.spec(Family::LuoBernoulliAbc).with_logs(la.clone(), lb.clone(), lc.clone()))
        })
    }

    /// `G_n(x, y; λ^m)` with EGF `2t e^{xt + y t^2} / (λ^m e^t + 1)`, from
    /// the order-one rows at `λ^m`.
    pub fn two_var(&self, m: u32, y: &F) -> Result<Rows<F>, Error> {
        self.get(format!("G2|pow{m}|{y}"), || Ok(Arc::new(heat_rows(&self.genocchi(1, m)?, y))))
    }
}
