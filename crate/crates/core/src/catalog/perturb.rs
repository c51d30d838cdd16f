use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::Scalar;

use super::structure::Structure;

/// One structure-constant shift: `tensor[index] += delta`, with `index` in
/// the nested order of [`super::NamedTensor`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Perturbation {
    pub tensor: &'static str,
    pub index: usize,
    pub delta: Scalar,
}

/// Copy of `s` with one entry shifted. The result is rebuilt from its
/// tensors, so no verification verdict carries over.
pub fn perturb(s: &Structure, tensor: &str, index: usize, delta: &Scalar) -> Result<Structure> {
    let mut tensors = s.tensors();
    let t = tensors
        .iter_mut()
        .find(|t| t.name == tensor)
        .ok_or_else(|| Error::InvalidParameter(format!("{} has no tensor {tensor:?}", s.kind())))?;
    let len = t.entries.len();
    let e = t
        .entries
        .get_mut(index)
        .ok_or_else(|| Error::InvalidParameter(format!("index {index} out of range for {tensor} ({len} entries)")))?;
    if delta.field() != s.field() {
        return Err(Error::InvalidParameter(format!("delta {delta} is not in {}", s.field())));
    }
    e.add_assign_ref(delta);
    Structure::from_tensors(s.kind(), s.field(), s.dim(), &tensors)
}

pub fn apply_perturbation(s: &Structure, p: &Perturbation) -> Result<Structure> {
    perturb(s, p.tensor, p.index, &p.delta)
}

/// Reproducible stream of perturbations for one structure: a ChaCha8
/// generator picks an entry uniformly among all tensor entries and a delta
/// from ±1, ±2, ±3.
pub struct PerturbationStream {
    rng: ChaCha8Rng,
    layout: Vec<(&'static str, usize)>,
    field: crate::exactlin::Field,
}

impl PerturbationStream {
    pub fn new(s: &Structure, seed: u64) -> Self {
        let layout = s.tensors().iter().map(|t| (t.name, t.entries.len())).collect();
        PerturbationStream { rng: ChaCha8Rng::seed_from_u64(seed), layout, field: s.field() }
    }
}

impl Iterator for PerturbationStream {
    type Item = Perturbation;

    fn next(&mut self) -> Option<Perturbation> {
        let total: usize = self.layout.iter().map(|(_, n)| n).sum();
        if total == 0 {
            return None;
        }
        let mut pick = self.rng.random_range(0..total);
        let magnitude = self.rng.random_range(1..=3i64);
        let sign = if self.rng.random_bool(0.5) { 1 } else { -1 };
        for &(name, n) in &self.layout {
            if pick < n {
                return Some(Perturbation { tensor: name, index: pick, delta: self.field.int(sign * magnitude) });
            }
            pick -= n;
        }
        None
    }
}
