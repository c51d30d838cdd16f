use super::matrix::Matrix;
use super::scalar::{Field, Scalar};

/// Evaluates a composite of tensor-factor-local linear maps on every basis
/// tensor of the input space at once. The current codomain is a tensor
/// product of factors with dimensions `dims`; each step rewrites a run of
/// adjacent factors or permutes them. Columns are stored sparsely in one
/// buffer, column `c` being `entries[starts[c]..starts[c + 1]]`.
#[derive(Clone, Debug)]
pub struct Diagram {
    field: Field,
    input_dims: Vec<usize>,
    dims: Vec<usize>,
    entries: Vec<(usize, Scalar)>,
    starts: Vec<usize>,
}

fn product(d: &[usize]) -> usize {
    d.iter().product()
}

/// Nonzero entries of each column of `f`.
fn sparse_columns(f: &Matrix) -> Vec<Vec<(usize, Scalar)>> {
    (0..f.cols())
        .map(|c| {
            (0..f.rows())
                .filter_map(|r| {
                    let v = f.get(r, c);
                    (!v.is_zero()).then(|| (r, v.clone()))
                })
                .collect()
        })
        .collect()
}

/// Sorts `buf[from..]` by row, sums duplicates and drops zeros.
fn normalize_tail(buf: &mut Vec<(usize, Scalar)>, from: usize) {
    let tail = &mut buf[from..];
    if !tail.windows(2).all(|w| w[0].0 < w[1].0) {
        tail.sort_unstable_by_key(|e| e.0);
    }
    let mut w = from;
    for i in from..buf.len() {
        if w > from && buf[w - 1].0 == buf[i].0 {
            let v = buf[i].1.clone();
            buf[w - 1].1.add_assign_ref(&v);
        } else {
            buf.swap(w, i);
            w += 1;
        }
    }
    buf.truncate(w);
    let mut w = from;
    for i in from..buf.len() {
        if !buf[i].1.is_zero() {
            buf.swap(w, i);
            w += 1;
        }
    }
    buf.truncate(w);
}

impl Diagram {
    /// Identity on the tensor product of spaces with the given dimensions.
    pub fn new(field: Field, dims: &[usize]) -> Self {
        let n = product(dims);
        Diagram {
            field,
            input_dims: dims.to_vec(),
            dims: dims.to_vec(),
            entries: (0..n).map(|i| (i, field.one())).collect(),
            starts: (0..=n).collect(),
        }
    }

    pub fn input_dims(&self) -> &[usize] {
        &self.input_dims
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Replaces factors `at..at+arity` by the image under `f`, whose
    /// codomain is split into factors `out`.
    pub fn apply(mut self, at: usize, arity: usize, f: &Matrix, out: &[usize]) -> Self {
        assert!(at + arity <= self.dims.len(), "factor range out of bounds");
        let mid = product(&self.dims[at..at + arity]);
        let post = product(&self.dims[at + arity..]);
        let out_size = product(out);
        assert_eq!(f.cols(), mid, "map source does not match factors {at}..{}", at + arity);
        assert_eq!(f.rows(), out_size, "map target does not match declared factors");
        assert_eq!(f.field(), self.field);
        let fcols = sparse_columns(f);
        let mut entries = Vec::with_capacity(self.entries.len());
        let mut starts = Vec::with_capacity(self.starts.len());
        starts.push(0);
        for c in 0..self.starts.len() - 1 {
            let from = entries.len();
            for (row, v) in &self.entries[self.starts[c]..self.starts[c + 1]] {
                let pre = row / (mid * post);
                let rem = row % (mid * post);
                let (m, p) = (rem / post, rem % post);
                for (k, fv) in &fcols[m] {
                    let x = if fv.is_one() { v.clone() } else { v * fv };
                    entries.push(((pre * out_size + k) * post + p, x));
                }
            }
            normalize_tail(&mut entries, from);
            starts.push(entries.len());
        }
        self.entries = entries;
        self.starts = starts;
        self.dims.splice(at..at + arity, out.iter().copied());
        self
    }

    /// Applies `f` to a single factor.
    pub fn map(self, at: usize, f: &Matrix) -> Self {
        let r = f.rows();
        self.apply(at, 1, f, &[r])
    }

    /// Applies a binary map (multiplication, action) to factors `at, at+1`.
    pub fn merge(self, at: usize, f: &Matrix) -> Self {
        let r = f.rows();
        self.apply(at, 2, f, &[r])
    }

    /// Applies a map with two output factors (comultiplication, coaction).
    pub fn split(self, at: usize, f: &Matrix, d1: usize, d2: usize) -> Self {
        self.apply(at, 1, f, &[d1, d2])
    }

    /// Inserts a new factor at position `at` holding the vector `v` (a `d x 1` matrix).
    pub fn insert(self, at: usize, v: &Matrix) -> Self {
        let r = v.rows();
        self.apply(at, 0, v, &[r])
    }

    /// Contracts factor `at` with a covector (a `1 x d` matrix).
    pub fn erase(self, at: usize, f: &Matrix) -> Self {
        self.apply(at, 1, f, &[])
    }

    /// Applies `f` to the whole current tensor product.
    pub fn then(self, f: &Matrix, out: &[usize]) -> Self {
        let n = self.dims.len();
        self.apply(0, n, f, out)
    }

    /// Reorders factors: new factor `i` is old factor `perm[i]`.
    pub fn permute(mut self, perm: &[usize]) -> Self {
        let n = self.dims.len();
        assert_eq!(perm.len(), n, "permutation length");
        let mut seen = vec![false; n];
        for &p in perm {
            assert!(p < n && !seen[p], "not a permutation");
            seen[p] = true;
        }
        let new_dims: Vec<usize> = perm.iter().map(|&p| self.dims[p]).collect();
        let total = product(&self.dims);
        let mut table = vec![0usize; total];
        let mut digits = vec![0usize; n];
        for (old, slot) in table.iter_mut().enumerate() {
            let mut x = old;
            for i in (0..n).rev() {
                digits[i] = x % self.dims[i];
                x /= self.dims[i];
            }
            let mut idx = 0;
            for i in 0..n {
                idx = idx * new_dims[i] + digits[perm[i]];
            }
            *slot = idx;
        }
        for e in &mut self.entries {
            e.0 = table[e.0];
        }
        for c in 0..self.starts.len() - 1 {
            self.entries[self.starts[c]..self.starts[c + 1]].sort_unstable_by_key(|e| e.0);
        }
        self.dims = new_dims;
        self
    }

    /// Swaps adjacent factors `at` and `at+1`.
    pub fn swap(self, at: usize) -> Self {
        let mut perm: Vec<usize> = (0..self.dims.len()).collect();
        perm.swap(at, at + 1);
        self.permute(&perm)
    }

    /// Dense matrix of the composite, `prod(dims) x prod(input_dims)`.
    pub fn matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.field, product(&self.dims), self.starts.len() - 1);
        for c in 0..self.starts.len() - 1 {
            for (r, v) in &self.entries[self.starts[c]..self.starts[c + 1]] {
                m.set(*r, c, v.clone());
            }
        }
        m
    }
}

/// Mixed-radix decoding of a flat basis index into a tuple.
pub fn decode_index(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for i in (0..dims.len()).rev() {
        out[i] = idx % dims[i];
        idx /= dims[i];
    }
    out
}
