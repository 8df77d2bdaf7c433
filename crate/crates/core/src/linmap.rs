//! Based finite-dimensional spaces and exact linear maps.
//!
//! Spaces are flat tensor products of named atomic spaces, so the tensor
//! product is strictly associative and the one-dimensional unit `K` (the
//! empty product) is strictly neutral. Basis order on a product is
//! lexicographic with the **last factor fastest**; the convention is global
//! and every Kronecker product and symmetry below relies on it.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};

#[derive(Debug, PartialEq, Eq)]
struct Atom {
    id: String,
    basis: Vec<String>,
}

/// A based finite-dimensional space: a (possibly empty) tensor product of
/// atomic based spaces. The empty product is the monoidal unit `K`.
#[derive(Debug, Clone)]
pub struct Space {
    factors: Vec<Arc<Atom>>,
}

impl PartialEq for Space {
    fn eq(&self, other: &Self) -> bool {
        self.factors.len() == other.factors.len()
            && self
                .factors
                .iter()
                .zip(&other.factors)
                .all(|(a, b)| Arc::ptr_eq(a, b) || a == b)
    }
}
impl Eq for Space {}

impl Space {
    /// The monoidal unit `K` (dimension 1, basis `["1"]` by convention).
    pub fn unit() -> Space {
        Space { factors: vec![] }
    }

    /// A fresh atomic space with the given name and basis labels.
    pub fn new(id: &str, basis: Vec<String>) -> Space {
        let mut seen = std::collections::HashSet::new();
        for b in &basis {
            assert!(seen.insert(b.clone()), "duplicate basis label {b:?} in space {id}");
        }
        Space {
            factors: vec![Arc::new(Atom { id: id.to_string(), basis })],
        }
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.factors.iter().map(|a| a.basis.len()).product()
    }

    pub fn id(&self) -> String {
        if self.is_unit() {
            "K".to_string()
        } else {
            self.factors
                .iter()
                .map(|a| a.id.clone())
                .collect::<Vec<_>>()
                .join("⊗")
        }
    }

    /// Strict tensor product: concatenation of factor lists.
    pub fn tensor(&self, other: &Space) -> Space {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Space { factors }
    }

    /// Label of the `i`-th basis vector (atom labels joined by `⊗`).
    pub fn basis_label(&self, i: usize) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        let mut parts = Vec::with_capacity(self.factors.len());
        let mut rem = i;
        for f in self.factors.iter().rev() {
            let d = f.basis.len();
            parts.push(f.basis[rem % d].clone());
            rem /= d;
        }
        parts.reverse();
        parts.join("⊗")
    }

    pub fn basis_labels(&self) -> Vec<String> {
        (0..self.dim()).map(|i| self.basis_label(i)).collect()
    }

    /// Index of the basis label in an atomic space.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis_labels().iter().position(|l| l == label)
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())
    }
}

/// An exact linear map between based spaces. Column `j` of the matrix is the
/// image of the `j`-th basis vector of the domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinMap {
    dom: Space,
    cod: Space,
    field: FieldSpec,
    /// Row-major, `cod.dim() × dom.dim()`.
    entries: Vec<Scalar>,
}

impl LinMap {
    pub fn zero(dom: &Space, cod: &Space, field: FieldSpec) -> LinMap {
        LinMap {
            dom: dom.clone(),
            cod: cod.clone(),
            field,
            entries: vec![field.zero(); dom.dim() * cod.dim()],
        }
    }

    pub fn identity(space: &Space, field: FieldSpec) -> LinMap {
        let mut m = LinMap::zero(space, space, field);
        for i in 0..space.dim() {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(
        dom: &Space,
        cod: &Space,
        field: FieldSpec,
        f: impl Fn(usize, usize) -> Scalar,
    ) -> LinMap {
        let (r, c) = (cod.dim(), dom.dim());
        let mut entries = Vec::with_capacity(r * c);
        for i in 0..r {
            for j in 0..c {
                let s = f(i, j);
                debug_assert_eq!(s.field(), field);
                entries.push(s);
            }
        }
        LinMap {
            dom: dom.clone(),
            cod: cod.clone(),
            field,
            entries,
        }
    }

    /// Builds a map from integer matrix rows (row-major, `cod × dom`).
    pub fn from_rows_i64(dom: &Space, cod: &Space, field: FieldSpec, rows: &[&[i64]]) -> LinMap {
        assert_eq!(rows.len(), cod.dim());
        for r in rows {
            assert_eq!(r.len(), dom.dim());
        }
        LinMap::from_fn(dom, cod, field, |i, j| field.from_i64(rows[i][j]))
    }

    pub fn dom(&self) -> &Space {
        &self.dom
    }
    pub fn cod(&self) -> &Space {
        &self.cod
    }
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, row: usize, col: usize) -> &Scalar {
        &self.entries[row * self.dom.dim() + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        let w = self.dom.dim();
        self.entries[row * w + col] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && *self == LinMap::identity(&self.dom, self.field)
    }

    /// Checked composition `self ∘ other`.
    pub fn compose(&self, other: &LinMap) -> Result<LinMap> {
        if self.dom != other.cod {
            return Err(Error::ShapeMismatch {
                context: format!(
                    "cannot compose: domain {} ≠ codomain {}",
                    self.dom.id(),
                    other.cod.id()
                ),
            });
        }
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        let (n, k, m) = (self.cod.dim(), self.dom.dim(), other.dom.dim());
        let mut out = LinMap::zero(&other.dom, &self.cod, self.field);
        // i-k-j order so zero entries of `self` short-circuit whole rows of `other`.
        for i in 0..n {
            for kk in 0..k {
                let a = self.get(i, kk);
                if a.is_zero() {
                    continue;
                }
                for j in 0..m {
                    let b = other.get(kk, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(i, j).add(&a.mul(b));
                    out.set(i, j, cur);
                }
            }
        }
        Ok(out)
    }

    /// Composition `self ∘ other`; panics on shape mismatch. The short name
    /// keeps transcription of long composites readable.
    pub fn o(&self, other: &LinMap) -> LinMap {
        self.compose(other).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Kronecker/tensor product `self ⊗ other`, last factor fastest.
    pub fn x(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.field, other.field, "field mismatch in tensor product");
        let dom = self.dom.tensor(&other.dom);
        let cod = self.cod.tensor(&other.cod);
        let (rd, cd) = (other.cod.dim(), other.dom.dim());
        let mut out = LinMap::zero(&dom, &cod, self.field);
        for i1 in 0..self.cod.dim() {
            for j1 in 0..self.dom.dim() {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..rd {
                    for j2 in 0..cd {
                        let b = other.get(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set(i1 * rd + i2, j1 * cd + j2, a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// The symmetry `c_{V,W}: V⊗W → W⊗V`, `(v_i, w_j) ↦ (w_j, v_i)`.
    pub fn symmetry(v: &Space, w: &Space, field: FieldSpec) -> LinMap {
        let dom = v.tensor(w);
        let cod = w.tensor(v);
        let (m, n) = (v.dim(), w.dim());
        let mut out = LinMap::zero(&dom, &cod, field);
        for i in 0..m {
            for j in 0..n {
                out.set(j * m + i, i * n + j, field.one());
            }
        }
        out
    }

    pub fn add(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.dom, other.dom, "add: domain mismatch");
        assert_eq!(self.cod, other.cod, "add: codomain mismatch");
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, other: &LinMap) -> LinMap {
        assert_eq!(self.dom, other.dom, "sub: domain mismatch");
        assert_eq!(self.cod, other.cod, "sub: codomain mismatch");
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(&other.entries) {
            *a = a.sub(b);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> LinMap {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.mul(s);
        }
        out
    }

    /// Column `j` rendered as a linear combination of codomain basis labels.
    pub fn column_string(&self, j: usize) -> String {
        let mut terms = Vec::new();
        for i in 0..self.cod.dim() {
            let e = self.get(i, j);
            if !e.is_zero() {
                terms.push(format!("{}·{}", e, self.cod.basis_label(i)));
            }
        }
        if terms.is_empty() {
            "0".to_string()
        } else {
            terms.join(" + ")
        }
    }

    /// First column index at which the two maps differ.
    pub fn first_diff_column(&self, other: &LinMap) -> Option<usize> {
        if self.dom != other.dom || self.cod != other.cod {
            return Some(0);
        }
        (0..self.dom.dim()).find(|&j| (0..self.cod.dim()).any(|i| self.get(i, j) != other.get(i, j)))
    }

    /// Exact two-sided inverse, if the map is invertible.
    pub fn try_inverse(&self) -> Result<LinMap> {
        if self.dom.dim() != self.cod.dim() {
            return Err(Error::NotInvertible);
        }
        let id = LinMap::identity(&self.cod, self.field);
        let fam = solve_affine(self, &id).map_err(|_| Error::NotInvertible)?;
        if !fam.basis.is_empty() {
            return Err(Error::NotInvertible);
        }
        Ok(fam.particular)
    }
}

impl fmt::Display for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} → {}", self.dom.id(), self.cod.id())?;
        for i in 0..self.cod.dim() {
            let row: Vec<String> = (0..self.dom.dim()).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A split idempotent `q = inj ∘ proj` with `proj ∘ inj = id`.
#[derive(Debug, Clone)]
pub struct SplitIdempotent {
    pub obj: Space,
    pub inj: LinMap,
    pub proj: LinMap,
}

/// A subobject `obj ↪ ambient` presented by a monomorphism.
#[derive(Debug, Clone)]
pub struct SubspaceEmbedding {
    pub obj: Space,
    pub emb: LinMap,
}

/// Solution family of an affine linear problem: `particular + span(basis)`.
#[derive(Debug, Clone)]
pub struct AffineFamily {
    pub particular: LinMap,
    pub basis: Vec<LinMap>,
}

impl AffineFamily {
    /// Number of members over GF(p); `None` over the rationals when the
    /// family is positive-dimensional.
    pub fn count(&self, field: FieldSpec) -> Option<u128> {
        if self.basis.is_empty() {
            return Some(1);
        }
        field
            .order()
            .map(|p| (p as u128).checked_pow(self.basis.len() as u32).unwrap_or(u128::MAX))
    }

    /// The `idx`-th member over GF(p) in lexicographic coefficient order
    /// (first basis coefficient slowest).
    pub fn member_gf(&self, field: FieldSpec, idx: u128) -> LinMap {
        let scalars = field.enumerate_scalars().expect("prime field");
        let p = scalars.len() as u128;
        let mut cand = self.particular.clone();
        let mut rem = idx;
        for i in (0..self.basis.len()).rev() {
            let c = (rem % p) as usize;
            rem /= p;
            if c != 0 {
                cand = cand.add(&self.basis[i].scale(&scalars[c]));
            }
        }
        cand
    }

    /// Iterates every member over GF(p) in lexicographic coefficient order.
    pub fn iter_gf(&self, field: FieldSpec) -> impl Iterator<Item = LinMap> + '_ {
        let total = self.count(field).unwrap_or(u128::MAX);
        (0..total).map(move |idx| self.member_gf(field, idx))
    }
}

/// The `idx`-th map `dom → cod` over GF(p) in lexicographic entry order.
pub fn map_from_index(dom: &Space, cod: &Space, field: FieldSpec, idx: u128) -> LinMap {
    let p = field.order().expect("prime field") as u128;
    let scalars = field.enumerate_scalars().expect("prime field");
    let n = dom.dim() * cod.dim();
    let mut rem = idx;
    let mut entries = vec![field.zero(); n];
    for e in entries.iter_mut().rev() {
        *e = scalars[(rem % p) as usize].clone();
        rem /= p;
    }
    LinMap {
        dom: dom.clone(),
        cod: cod.clone(),
        field,
        entries,
    }
}

/// Number of maps `dom → cod` over GF(p), checked against `bound`.
pub fn count_all_maps(dom: &Space, cod: &Space, field: FieldSpec, bound: u64) -> Result<u128> {
    let p = field.order().ok_or(Error::NotEnumerable)?;
    let n = dom.dim() * cod.dim();
    let total = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > bound as u128 {
        return Err(Error::SearchSpaceTooLarge {
            needed: total,
            bound,
        });
    }
    Ok(total)
}

/// Iterates every map `dom → cod` over GF(p) in lexicographic entry order,
/// after checking the candidate count against `bound`. Also returns the count.
pub fn enumerate_all_maps(
    dom: &Space,
    cod: &Space,
    field: FieldSpec,
    bound: u64,
) -> Result<(u128, impl Iterator<Item = LinMap>)> {
    let total = count_all_maps(dom, cod, field, bound)?;
    let dom = dom.clone();
    let cod = cod.clone();
    let iter = (0..total).map(move |idx| map_from_index(&dom, &cod, field, idx));
    Ok((total, iter))
}

/// Reduced row echelon form in place. Returns the pivot columns.
fn rref(rows: &mut [Vec<Scalar>]) -> Vec<usize> {
    let nrows = rows.len();
    if nrows == 0 {
        return vec![];
    }
    let ncols = rows[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        // find a pivot
        let Some(pr) = (r..nrows).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].inv().expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..nrows {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                let (head, tail) = rows.split_at_mut(i.max(r));
                let (pivot_row, target_row) = if r < i {
                    (&head[r], &mut tail[0])
                } else {
                    (&tail[0], &mut head[i])
                };
                for (t, p) in target_row.iter_mut().zip(pivot_row.iter()) {
                    *t = t.sub(&p.mul(&factor));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == nrows {
            break;
        }
    }
    pivots
}

fn map_rows(m: &LinMap) -> Vec<Vec<Scalar>> {
    (0..m.cod().dim())
        .map(|i| (0..m.dom().dim()).map(|j| m.get(i, j).clone()).collect())
        .collect()
}

pub fn rank(m: &LinMap) -> usize {
    let mut rows = map_rows(m);
    rref(&mut rows).len()
}

/// Kernel of `f` as a subspace embedding. The new atomic space is named
/// `name` with generated basis labels `name:0`, `name:1`, ….
pub fn kernel(f: &LinMap, name: &str) -> SubspaceEmbedding {
    let field = f.field();
    let mut rows = map_rows(f);
    let pivots = rref(&mut rows);
    let n = f.dom().dim();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let obj = Space::new(name, (0..free.len()).map(|i| format!("{name}:{i}")).collect());
    let mut emb = LinMap::zero(&obj, f.dom(), field);
    for (k, &fc) in free.iter().enumerate() {
        emb.set(fc, k, field.one());
        for (r, &pc) in pivots.iter().enumerate() {
            emb.set(pc, k, rows[r][fc].neg());
        }
    }
    SubspaceEmbedding { obj, emb }
}

/// Equalizer of `f, g: V → W`, computed as `ker(f − g)`.
pub fn equalizer(f: &LinMap, g: &LinMap, name: &str) -> Result<SubspaceEmbedding> {
    if f.dom() != g.dom() || f.cod() != g.cod() {
        return Err(Error::ShapeMismatch {
            context: format!(
                "equalizer of {}→{} and {}→{}",
                f.dom().id(),
                f.cod().id(),
                g.dom().id(),
                g.cod().id()
            ),
        });
    }
    Ok(kernel(&f.sub(g), name))
}

/// Solves `L ∘ X = M` exactly. Returns one particular solution and a basis of
/// the homogeneous solution space, or `Inconsistent`.
pub fn solve_affine(l: &LinMap, m: &LinMap) -> Result<AffineFamily> {
    if l.cod() != m.cod() {
        return Err(Error::ShapeMismatch {
            context: format!("solve: codomain {} ≠ {}", l.cod().id(), m.cod().id()),
        });
    }
    let field = l.field();
    let (rows_n, unknowns, rhs_cols) = (l.cod().dim(), l.dom().dim(), m.dom().dim());
    // augmented matrix [L | M], one elimination for all right-hand sides
    let mut rows: Vec<Vec<Scalar>> = (0..rows_n)
        .map(|i| {
            let mut row: Vec<Scalar> = (0..unknowns).map(|j| l.get(i, j).clone()).collect();
            row.extend((0..rhs_cols).map(|j| m.get(i, j).clone()));
            row
        })
        .collect();
    let pivots_all = rref(&mut rows);
    let pivots: Vec<usize> = pivots_all.iter().copied().filter(|&c| c < unknowns).collect();
    if pivots.len() != pivots_all.len() {
        return Err(Error::Inconsistent); // a pivot landed in the augmented block
    }
    let mut particular = LinMap::zero(m.dom(), l.dom(), field);
    for (r, &pc) in pivots.iter().enumerate() {
        for j in 0..rhs_cols {
            particular.set(pc, j, rows[r][unknowns + j].clone());
        }
    }
    // homogeneous kernel of L, one basis matrix per (kernel vector, rhs column)
    let kern = kernel(l, "hom");
    let mut basis = Vec::new();
    for b in 0..kern.obj.dim() {
        for j in 0..rhs_cols {
            let mut h = LinMap::zero(m.dom(), l.dom(), field);
            for i in 0..unknowns {
                h.set(i, j, kern.emb.get(i, b).clone());
            }
            basis.push(h);
        }
    }
    Ok(AffineFamily { particular, basis })
}

/// Splits an idempotent `q` through its image. Errors unless `q ∘ q = q`.
pub fn split_idempotent(q: &LinMap, name: &str) -> Result<SplitIdempotent> {
    if q.dom() != q.cod() {
        return Err(Error::ShapeMismatch {
            context: "split_idempotent requires an endomorphism".to_string(),
        });
    }
    if q.o(q) != *q {
        return Err(Error::NotIdempotent);
    }
    let field = q.field();
    // image basis: pivot columns of q
    let mut rows = map_rows(q);
    let pivots = rref(&mut rows);
    let obj = Space::new(name, (0..pivots.len()).map(|i| format!("{name}:{i}")).collect());
    let mut inj = LinMap::zero(&obj, q.dom(), field);
    for (k, &c) in pivots.iter().enumerate() {
        for i in 0..q.cod().dim() {
            inj.set(i, k, q.get(i, c).clone());
        }
    }
    // unique proj with inj ∘ proj = q (inj has full column rank)
    let fam = solve_affine(&inj, q)?;
    debug_assert!(fam.basis.is_empty());
    let proj = fam.particular;
    debug_assert!(proj.o(&inj).is_identity());
    Ok(SplitIdempotent { obj, inj, proj })
}

/// The unique `m'` with `emb ∘ m' = m`, when the image of `m` lies in the
/// image of the monomorphism `emb`.
pub fn factor_through(m: &LinMap, emb: &LinMap) -> Result<LinMap> {
    if emb.cod() != m.cod() {
        return Err(Error::ShapeMismatch {
            context: format!("factor: codomain {} ≠ {}", emb.cod().id(), m.cod().id()),
        });
    }
    let fam = solve_affine(emb, m).map_err(|_| Error::NoFactorization {
        context: format!("image of map into {} not contained in subobject", m.cod().id()),
    })?;
    if !fam.basis.is_empty() {
        return Err(Error::NoFactorization {
            context: "embedding is not a monomorphism".to_string(),
        });
    }
    Ok(fam.particular)
}

/// Column-space embedding of `f` (a basis of the image).
pub fn column_space(f: &LinMap, name: &str) -> SubspaceEmbedding {
    let field = f.field();
    let mut rows = map_rows(f);
    let pivots = rref(&mut rows);
    let obj = Space::new(name, (0..pivots.len()).map(|i| format!("{name}:{i}")).collect());
    let mut emb = LinMap::zero(&obj, f.cod(), field);
    for (k, &c) in pivots.iter().enumerate() {
        for i in 0..f.cod().dim() {
            emb.set(i, k, f.get(i, c).clone());
        }
    }
    SubspaceEmbedding { obj, emb }
}

/// Do two monomorphisms into the same space have the same image?
pub fn same_image(a: &LinMap, b: &LinMap) -> bool {
    factor_through(a, b).is_ok() && factor_through(b, a).is_ok()
}

/// Solves a system of linear constraints `op_i(X) = rhs_i` for an unknown map
/// `X: dom → cod`, where every `op_i` is linear in `X`. The operators are
/// probed on basis maps to build one big exact linear system.
pub fn solve_linear_map_system(
    dom: &Space,
    cod: &Space,
    field: FieldSpec,
    ops: &[&dyn Fn(&LinMap) -> LinMap],
    rhs: &[&LinMap],
) -> Result<AffineFamily> {
    assert_eq!(ops.len(), rhs.len());
    let unknowns = dom.dim() * cod.dim();
    let out_dims: Vec<usize> = rhs.iter().map(|r| r.dom().dim() * r.cod().dim()).collect();
    let total_rows: usize = out_dims.iter().sum();
    let mut big = vec![vec![field.zero(); unknowns + 1]; total_rows];
    // probe each basis map E_{rc}
    for r in 0..cod.dim() {
        for c in 0..dom.dim() {
            let mut e = LinMap::zero(dom, cod, field);
            e.set(r, c, field.one());
            let col = r * dom.dim() + c;
            let mut row0 = 0;
            for (op, od) in ops.iter().zip(&out_dims) {
                let img = op(&e);
                debug_assert_eq!(img.dom().dim() * img.cod().dim(), *od);
                let w = img.dom().dim();
                for i in 0..img.cod().dim() {
                    for j in 0..w {
                        big[row0 + i * w + j][col] = img.get(i, j).clone();
                    }
                }
                row0 += od;
            }
        }
    }
    let mut row0 = 0;
    for (r, od) in rhs.iter().zip(&out_dims) {
        let w = r.dom().dim();
        for i in 0..r.cod().dim() {
            for j in 0..w {
                big[row0 + i * w + j][unknowns] = r.get(i, j).clone();
            }
        }
        row0 += od;
    }
    let pivots = rref(&mut big);
    if pivots.contains(&unknowns) {
        return Err(Error::Inconsistent);
    }
    let mut particular = LinMap::zero(dom, cod, field);
    for (r, &pc) in pivots.iter().enumerate() {
        particular.entries[pc] = big[r][unknowns].clone();
    }
    let free: Vec<usize> = (0..unknowns).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::new();
    for &fc in &free {
        let mut h = LinMap::zero(dom, cod, field);
        h.entries[fc] = field.one();
        for (r, &pc) in pivots.iter().enumerate() {
            h.entries[pc] = big[r][fc].neg();
        }
        basis.push(h);
    }
    Ok(AffineFamily { particular, basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn space(id: &str, labels: &[&str]) -> Space {
        Space::new(id, labels.iter().map(|s| s.to_string()).collect())
    }

    #[test]
    fn compose_identity_and_zero() {
        let f3 = gf(3);
        let v = space("V", &["a", "b"]);
        let w = space("W", &["x", "y", "z"]);
        let f = LinMap::from_rows_i64(&v, &w, f3, &[&[1, 2], &[0, 1], &[2, 2]]);
        assert_eq!(LinMap::identity(&w, f3).o(&f), f);
        assert_eq!(f.o(&LinMap::identity(&v, f3)), f);
        assert!(LinMap::zero(&w, &v, f3).o(&f).is_zero());
    }

    #[test]
    fn compose_matches_hand_product_mod_3() {
        let f3 = gf(3);
        let v = space("V", &["a", "b"]);
        let g = LinMap::from_rows_i64(&v, &v, f3, &[&[1, 2], &[0, 1]]);
        let f = LinMap::from_rows_i64(&v, &v, f3, &[&[1, 0], &[1, 1]]);
        let expect = LinMap::from_rows_i64(&v, &v, f3, &[&[0, 2], &[1, 1]]);
        assert_eq!(g.o(&f), expect);
    }

    #[test]
    fn tensor_of_identities_and_unit_strictness() {
        let f3 = gf(3);
        let v = space("V", &["a", "b"]);
        let w = space("W", &["x", "y", "z"]);
        let idv = LinMap::identity(&v, f3);
        let idw = LinMap::identity(&w, f3);
        assert_eq!(idv.x(&idw), LinMap::identity(&v.tensor(&w), f3));
        // strict unit: f ⊗ id_K = f on the nose
        let f = LinMap::from_rows_i64(&v, &w, f3, &[&[1, 2], &[0, 1], &[2, 2]]);
        let idk = LinMap::identity(&Space::unit(), f3);
        assert_eq!(f.x(&idk), f);
        assert_eq!(idk.x(&f), f);
    }

    #[test]
    fn kronecker_2x3_matches_direct_expansion() {
        // oracle: direct Kronecker index formula, computed independently
        let f5 = gf(5);
        let v = space("V", &["a", "b"]);
        let w = space("W", &["x", "y", "z"]);
        let f = LinMap::from_rows_i64(&v, &v, f5, &[&[1, 2], &[3, 4]]);
        let g = LinMap::from_rows_i64(&w, &w, f5, &[&[0, 1, 2], &[3, 0, 4], &[1, 1, 0]]);
        let t = f.x(&g);
        assert_eq!(t.dom().dim(), 6);
        for i1 in 0..2 {
            for j1 in 0..2 {
                for i2 in 0..3 {
                    for j2 in 0..3 {
                        let expect = f.get(i1, j1).mul(g.get(i2, j2));
                        assert_eq!(*t.get(i1 * 3 + i2, j1 * 3 + j2), expect);
                    }
                }
            }
        }
    }

    #[test]
    fn symmetry_swaps_and_squares_to_identity() {
        let f3 = gf(3);
        let v = space("V", &["a", "b"]);
        let w = space("W", &["x", "y", "z"]);
        let c_vw = LinMap::symmetry(&v, &w, f3);
        let c_wv = LinMap::symmetry(&w, &v, f3);
        assert_eq!(c_wv.o(&c_vw), LinMap::identity(&v.tensor(&w), f3));
        // c_{K,V} = id_V under the strict unit
        let k = Space::unit();
        assert_eq!(LinMap::symmetry(&k, &v, f3), LinMap::identity(&v, f3));
        // on V⊗V it swaps (a,b) ↔ (b,a) and fixes the diagonal
        let c = LinMap::symmetry(&v, &v, f3);
        let vv = v.tensor(&v);
        assert_eq!(vv.basis_label(1), "a⊗b");
        assert!(c.get(2, 1).is_one() && c.get(1, 2).is_one());
        assert!(c.get(0, 0).is_one() && c.get(3, 3).is_one());
    }

    #[test]
    fn kernel_examples() {
        let f3 = gf(3);
        let v = space("V", &["a", "b"]);
        let k = Space::unit();
        // kernel of the zero map is everything
        let z = LinMap::zero(&v, &k, f3);
        assert_eq!(kernel(&z, "ker").obj.dim(), 2);
        // kernel of the identity is zero
        assert_eq!(kernel(&LinMap::identity(&v, f3), "ker").obj.dim(), 0);
        // f = [1, 2] over GF(3): kernel spanned by (1, 1)
        let f = LinMap::from_rows_i64(&v, &k, f3, &[&[1, 2]]);
        let ker = kernel(&f, "ker");
        assert_eq!(ker.obj.dim(), 1);
        let col: Vec<_> = (0..2).map(|i| ker.emb.get(i, 0).clone()).collect();
        // normalize leading coefficient
        let lead_inv = col.iter().find(|c| !c.is_zero()).unwrap().inv().unwrap();
        let normalized: Vec<_> = col.iter().map(|c| c.mul(&lead_inv)).collect();
        assert_eq!(normalized, vec![f3.one(), f3.one()]);
        assert!(f.o(&ker.emb).is_zero());
    }

    #[test]
    fn solve_affine_cases() {
        let f3 = gf(3);
        let v = space("V", &["a", "b"]);
        let m = LinMap::from_rows_i64(&v, &v, f3, &[&[1, 2], &[0, 1]]);
        // L = id → unique solution M
        let fam = solve_affine(&LinMap::identity(&v, f3), &m).unwrap();
        assert_eq!(fam.particular, m);
        assert!(fam.basis.is_empty());
        // L = 0, M = 0 → particular 0, homogeneous everything
        let z = LinMap::zero(&v, &v, f3);
        let fam = solve_affine(&z, &z).unwrap();
        assert!(fam.particular.is_zero());
        assert_eq!(fam.basis.len(), 4);
        // L = 0, M ≠ 0 → inconsistent
        assert!(matches!(solve_affine(&z, &m), Err(Error::Inconsistent)));
    }

    #[test]
    fn split_idempotent_examples() {
        let fq = FieldSpec::Rationals;
        let v = space("V", &["a", "b"]);
        // q = id
        let s = split_idempotent(&LinMap::identity(&v, fq), "Z").unwrap();
        assert_eq!(s.obj.dim(), 2);
        assert!(s.inj.o(&s.proj).is_identity());
        // q = 0
        let s = split_idempotent(&LinMap::zero(&v, &v, fq), "Z").unwrap();
        assert_eq!(s.obj.dim(), 0);
        // q = diag(1, 0)
        let q = LinMap::from_rows_i64(&v, &v, fq, &[&[1, 0], &[0, 0]]);
        let s = split_idempotent(&q, "Z").unwrap();
        assert_eq!(s.obj.dim(), 1);
        assert_eq!(s.inj, LinMap::from_rows_i64(&s.obj, &v, fq, &[&[1], &[0]]));
        assert_eq!(s.proj, LinMap::from_rows_i64(&v, &s.obj, fq, &[&[1, 0]]));
        assert_eq!(s.inj.o(&s.proj), q);
        // not idempotent
        let bad = LinMap::from_rows_i64(&v, &v, fq, &[&[1, 1], &[1, 1]]);
        assert_eq!(split_idempotent(&bad, "Z").unwrap_err(), Error::NotIdempotent);
    }

    #[test]
    fn factor_through_examples() {
        let f3 = gf(3);
        let v = space("V", &["a", "b"]);
        let z = space("Z", &["z"]);
        let emb = LinMap::from_rows_i64(&z, &v, f3, &[&[1], &[1]]);
        assert!(factor_through(&emb, &emb).unwrap().is_identity());
        assert!(factor_through(&LinMap::zero(&z, &v, f3), &emb).unwrap().is_zero());
        // a column outside the image
        let m = LinMap::from_rows_i64(&z, &v, f3, &[&[1], &[0]]);
        assert!(matches!(factor_through(&m, &emb), Err(Error::NoFactorization { .. })));
    }

    #[test]
    fn equalizer_trivial_cases() {
        let f3 = gf(3);
        let v = space("V", &["a", "b"]);
        let f = LinMap::from_rows_i64(&v, &v, f3, &[&[1, 2], &[0, 1]]);
        let e = equalizer(&f, &f, "E").unwrap();
        assert_eq!(e.obj.dim(), 2);
        let e = equalizer(&LinMap::identity(&v, f3), &LinMap::zero(&v, &v, f3), "E").unwrap();
        assert_eq!(e.obj.dim(), 0);
    }

    fn named_space(id: &str, dim: usize) -> Space {
        Space::new(id, (0..dim).map(|i| format!("{id}{i}")).collect())
    }

    fn arb_map(dom: Space, cod: Space) -> impl Strategy<Value = LinMap> {
        let (dd, cd) = (dom.dim(), cod.dim());
        proptest::collection::vec(0i64..3, dd * cd).prop_map(move |vals| {
            LinMap::from_fn(&dom, &cod, gf(3), |i, j| gf(3).from_i64(vals[i * dd + j]))
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn interchange_law(f in arb_map(named_space("U", 2), named_space("V", 2)),
                           g in arb_map(named_space("W", 3), named_space("X", 2)),
                           f2 in arb_map(named_space("T", 2), named_space("U", 2)),
                           g2 in arb_map(named_space("S", 2), named_space("W", 3))) {
            // (f⊗g)∘(f'⊗g') = (f∘f')⊗(g∘g')
            prop_assert_eq!(f.x(&g).o(&f2.x(&g2)), f.o(&f2).x(&g.o(&g2)));
        }

        #[test]
        fn symmetry_naturality(f in arb_map(named_space("U", 2), named_space("V", 3)),
                               g in arb_map(named_space("W", 2), named_space("X", 2))) {
            // c_{V',W'} ∘ (f⊗g) = (g⊗f) ∘ c_{V,W}
            let c_dom = LinMap::symmetry(f.dom(), g.dom(), gf(3));
            let c_cod = LinMap::symmetry(f.cod(), g.cod(), gf(3));
            prop_assert_eq!(c_cod.o(&f.x(&g)), g.x(&f).o(&c_dom));
        }

        #[test]
        fn split_round_trip(m in arb_map(named_space("V", 3), named_space("V", 3))) {
            if m.o(&m) == m {
                let s = split_idempotent(&m, "Z").unwrap();
                prop_assert_eq!(s.inj.o(&s.proj), m);
                prop_assert!(s.proj.o(&s.inj).is_identity());
            }
        }

        #[test]
        fn equalizer_universal_property(f in arb_map(named_space("V", 3), named_space("W", 2)),
                                        g in arb_map(named_space("V", 3), named_space("W", 2)),
                                        h in arb_map(named_space("Q", 3), named_space("V", 3))) {
            let e = equalizer(&f, &g, "E").unwrap();
            // any h with f∘h = g∘h factors through the equalizer
            if f.o(&h) == g.o(&h) {
                let hp = factor_through(&h, &e.emb).unwrap();
                prop_assert_eq!(e.emb.o(&hp), h);
            }
        }
    }
}
