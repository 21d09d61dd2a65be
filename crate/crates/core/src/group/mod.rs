//! The H3 root system, the icosahedral group and its vertex sets.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polyalg::{dot, identity, mat_mul, transpose, vec_mat, Mat3};
use crate::scalars::GoldenNumber;

pub type Vec3 = [GoldenNumber; 3];

fn g(a: i64, b: i64) -> GoldenNumber {
    GoldenNumber::ints(a, b)
}

/// Shorthand for the entries that occur: 0, ±1, ±2, ±τ, ±τ⁻¹.
fn v3(a: GoldenNumber, b: GoldenNumber, c: GoldenNumber) -> Vec3 {
    [a, b, c]
}

pub fn tau() -> GoldenNumber {
    GoldenNumber::tau()
}

pub fn tau_inv() -> GoldenNumber {
    GoldenNumber::tau_inv()
}

pub fn int(n: i64) -> GoldenNumber {
    GoldenNumber::from_int(n)
}

pub fn norm_sq(v: &Vec3) -> GoldenNumber {
    dot(v, v)
}

pub fn neg3(v: &Vec3) -> Vec3 {
    [-&v[0], -&v[1], -&v[2]]
}

#[derive(Clone, Debug)]
pub struct RootSystemH3 {
    pub positive_roots: Vec<Vec3>,
    pub u0: Vec3,
}

impl Default for RootSystemH3 {
    fn default() -> Self {
        Self::new()
    }
}

impl RootSystemH3 {
    pub fn new() -> Self {
        let (t, ti, one) = (tau(), tau_inv(), int(1));
        let m = |x: &GoldenNumber| -x;
        let mut roots = vec![v3(int(2), int(0), int(0)), v3(int(0), int(2), int(0)), v3(int(0), int(0), int(2))];
        for s1 in [1, -1] {
            for s2 in [1, -1] {
                let a = if s1 > 0 { ti.clone() } else { m(&ti) };
                let b = if s2 > 0 { one.clone() } else { m(&one) };
                roots.push(v3(t.clone(), a, b));
            }
        }
        for s1 in [1, -1] {
            for s2 in [1, -1] {
                let a = if s1 > 0 { one.clone() } else { m(&one) };
                let c = if s2 > 0 { ti.clone() } else { m(&ti) };
                roots.push(v3(a, t.clone(), c));
            }
        }
        roots.push(v3(ti.clone(), one.clone(), t.clone()));
        roots.push(v3(ti.clone(), m(&one), t.clone()));
        roots.push(v3(m(&ti), one.clone(), t.clone()));
        roots.push(v3(ti.clone(), one.clone(), m(&t)));
        RootSystemH3 { positive_roots: roots, u0: v3(int(3), g(0, 2), int(1)) }
    }

    /// Simple roots v₁, v₂, v₃.
    pub fn simple_roots() -> [Vec3; 3] {
        [
            v3(tau(), -tau_inv(), int(-1)),
            v3(int(-1), tau(), -tau_inv()),
            v3(tau_inv(), int(-1), tau()),
        ]
    }

    /// Index of `±v` among the positive roots.
    pub fn root_index(&self, v: &Vec3) -> Option<usize> {
        let nv = neg3(v);
        self.positive_roots.iter().position(|r| r == v || *r == nv)
    }
}

/// `xσ_v = x − 2⟨x,v⟩/|v|² v`, as a matrix acting on row vectors.
pub fn reflection_matrix(v: &Vec3) -> Mat3 {
    let n = norm_sq(v);
    assert!(!n.is_zero(), "zero root");
    let f = &GoldenNumber::from_int(2) * &n.inv().unwrap();
    let mut m = identity();
    for (i, row) in m.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell -= &(&f * &(&v[i] * &v[j]));
        }
    }
    m
}

pub fn det3(m: &Mat3) -> GoldenNumber {
    let t = |a: &GoldenNumber, b: &GoldenNumber| a * b;
    let c0 = &t(&m[1][1], &m[2][2]) - &t(&m[1][2], &m[2][1]);
    let c1 = &t(&m[1][0], &m[2][2]) - &t(&m[1][2], &m[2][0]);
    let c2 = &t(&m[1][0], &m[2][1]) - &t(&m[1][1], &m[2][0]);
    &(&t(&m[0][0], &c0) - &t(&m[0][1], &c1)) + &t(&m[0][2], &c2)
}

pub fn trace3(m: &Mat3) -> GoldenNumber {
    &(&m[0][0] + &m[1][1]) + &m[2][2]
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ClassTag {
    #[serde(rename = "identity")]
    Identity,
    #[serde(rename = "reflection")]
    Reflection,
    #[serde(rename = "rho2")]
    Rho2,
    #[serde(rename = "rho3")]
    Rho3,
    #[serde(rename = "rho5_1")]
    Rho51,
    #[serde(rename = "rho5_2")]
    Rho52,
    #[serde(rename = "improper")]
    Improper,
}

impl ClassTag {
    pub const ALL: [ClassTag; 7] = [
        ClassTag::Identity,
        ClassTag::Reflection,
        ClassTag::Rho2,
        ClassTag::Rho3,
        ClassTag::Rho51,
        ClassTag::Rho52,
        ClassTag::Improper,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            ClassTag::Identity => "identity",
            ClassTag::Reflection => "reflection",
            ClassTag::Rho2 => "rho2",
            ClassTag::Rho3 => "rho3",
            ClassTag::Rho51 => "rho5_1",
            ClassTag::Rho52 => "rho5_2",
            ClassTag::Improper => "improper",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub matrix: Mat3,
    pub det: i8,
    pub trace: GoldenNumber,
    pub order: u8,
    pub class_tag: ClassTag,
}

impl GroupElement {
    pub fn from_matrix(matrix: Mat3) -> Self {
        let d = det3(&matrix);
        let det = if d.is_one() {
            1
        } else if (-&d).is_one() {
            -1
        } else {
            panic!("matrix is not orthogonal: det = {}", d)
        };
        let id = identity();
        let mut order = 1u8;
        let mut p = matrix.clone();
        while p != id {
            p = mat_mul(&p, &matrix);
            order += 1;
            assert!(order <= 10, "element order exceeds 10");
        }
        let trace = trace3(&matrix);
        let class_tag = classify(det, order, &trace);
        GroupElement { matrix, det, trace, order, class_tag }
    }

    pub fn is_orthogonal(&self) -> bool {
        mat_mul(&transpose(&self.matrix), &self.matrix) == identity()
    }

    pub fn inverse_matrix(&self) -> Mat3 {
        transpose(&self.matrix)
    }

    /// Row-vector action `x ↦ xW`.
    pub fn apply(&self, x: &Vec3) -> Vec3 {
        vec_mat(x, &self.matrix)
    }
}

fn classify(det: i8, order: u8, trace: &GoldenNumber) -> ClassTag {
    if det == -1 {
        return if order == 2 && *trace == int(1) { ClassTag::Reflection } else { ClassTag::Improper };
    }
    match order {
        1 => ClassTag::Identity,
        2 => ClassTag::Rho2,
        3 => ClassTag::Rho3,
        5 if *trace == tau() => ClassTag::Rho51,
        5 if *trace == g(1, -1) => ClassTag::Rho52,
        _ => panic!("unexpected rotation of order {} and trace {}", order, trace),
    }
}

fn cmp_matrix(a: &Mat3, b: &Mat3) -> std::cmp::Ordering {
    for i in 0..3 {
        for j in 0..3 {
            let c = a[i][j].cmp(&b[i][j]);
            if c != std::cmp::Ordering::Equal {
                return c;
            }
        }
    }
    std::cmp::Ordering::Equal
}

/// Closure of the 15 reflections under multiplication, sorted by
/// (det, order, trace, matrix entries).
pub fn generate_group(r: &RootSystemH3) -> Result<Vec<GroupElement>> {
    generate_from(&r.positive_roots.iter().map(reflection_matrix).collect::<Vec<_>>(), 120)
}

pub(crate) fn generate_from(gens: &[Mat3], cap: usize) -> Result<Vec<GroupElement>> {
    let mut seen: HashMap<Mat3, ()> = HashMap::new();
    let mut queue = VecDeque::new();
    let id = identity();
    seen.insert(id.clone(), ());
    queue.push_back(id);
    while let Some(m) = queue.pop_front() {
        for s in gens {
            let p = mat_mul(&m, s);
            if !seen.contains_key(&p) {
                if seen.len() >= cap {
                    return Err(Error::ClosureOverflow(cap));
                }
                seen.insert(p.clone(), ());
                queue.push_back(p);
            }
        }
    }
    let mut elems: Vec<GroupElement> = seen.into_keys().map(GroupElement::from_matrix).collect();
    elems.sort_by(|a, b| {
        a.det
            .cmp(&b.det)
            .then(a.order.cmp(&b.order))
            .then(a.trace.cmp(&b.trace))
            .then_with(|| cmp_matrix(&a.matrix, &b.matrix))
    });
    Ok(elems)
}

/// Icosahedron and dodecahedron vertices with their positive halves.
#[derive(Clone, Debug)]
pub struct VertexSets {
    pub i: Vec<Vec3>,
    pub i_plus: Vec<Vec3>,
    pub k: Vec<Vec3>,
    pub k_plus: Vec<Vec3>,
}

fn signed_cyclic(base: [GoldenNumber; 2], zero_pos: usize) -> Vec<Vec3> {
    // zero at `zero_pos`, the two nonzero entries in cyclic order after it
    let mut out = Vec::new();
    for s1 in [1, -1] {
        for s2 in [1, -1] {
            let mut v: Vec3 = Default::default();
            v[(zero_pos + 1) % 3] = base[0].scale(&crate::scalars::rat(s1, 1));
            v[(zero_pos + 2) % 3] = base[1].scale(&crate::scalars::rat(s2, 1));
            out.push(v);
        }
    }
    out
}

impl VertexSets {
    pub fn new(r: &RootSystemH3) -> Self {
        let mut i = Vec::new();
        for z in 0..3 {
            i.extend(signed_cyclic([tau(), int(1)], z));
        }
        let mut k = Vec::new();
        for z in 0..3 {
            k.extend(signed_cyclic([tau_inv(), tau()], z));
        }
        for s1 in [1, -1] {
            for s2 in [1, -1] {
                for s3 in [1, -1] {
                    k.push([int(s1), int(s2), int(s3)]);
                }
            }
        }
        let pos = |v: &Vec3| dot(v, &r.u0).signum() > 0;
        let i_plus = i.iter().filter(|v| pos(v)).cloned().collect();
        let k_plus = k.iter().filter(|v| pos(v)).cloned().collect();
        VertexSets { i, i_plus, k, k_plus }
    }
}

/// (number of reflections fixing y, number moving it).
pub fn stabilizer_census(r: &RootSystemH3, y: &Vec3) -> (usize, usize) {
    let mut fixing = 0;
    for v in &r.positive_roots {
        if vec_mat(y, &reflection_matrix(v)) == *y {
            fixing += 1;
        }
    }
    (fixing, r.positive_roots.len() - fixing)
}

/// The group together with lookup and multiplication tables.
pub struct H3Group {
    pub roots: RootSystemH3,
    pub vertices: VertexSets,
    pub elements: Vec<GroupElement>,
    index: HashMap<Mat3, usize>,
    /// `mult[a][b]` is the index of `elements[a].matrix · elements[b].matrix`.
    mult: Vec<Vec<u16>>,
    /// Element index of σ_v for each positive root.
    pub reflections: Vec<usize>,
    pub identity: usize,
}

impl H3Group {
    pub fn new() -> Result<Self> {
        let roots = RootSystemH3::new();
        let vertices = VertexSets::new(&roots);
        let elements = generate_group(&roots)?;
        let index: HashMap<Mat3, usize> = elements.iter().enumerate().map(|(i, e)| (e.matrix.clone(), i)).collect();
        let mult = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&mat_mul(&a.matrix, &b.matrix)] as u16).collect())
            .collect();
        let reflections = roots.positive_roots.iter().map(|v| index[&reflection_matrix(v)]).collect();
        let identity = index[&identity()];
        Ok(H3Group { roots, vertices, elements, index, mult, reflections, identity })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, m: &Mat3) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mult[a][b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse_matrix()]
    }

    pub fn class_members(&self, tag: ClassTag) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.elements[i].class_tag == tag).collect()
    }

    pub fn census(&self) -> Census {
        let count = |t: ClassTag| self.elements.iter().filter(|e| e.class_tag == t).count();
        Census {
            order: self.len(),
            reflections: count(ClassTag::Reflection),
            rotations: self.elements.iter().filter(|e| e.det == 1 && e.class_tag != ClassTag::Identity).count(),
            improper_non_reflections: count(ClassTag::Improper),
            rho2: count(ClassTag::Rho2),
            rho3: count(ClassTag::Rho3),
            rho5_1: count(ClassTag::Rho51),
            rho5_2: count(ClassTag::Rho52),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Census {
    pub order: usize,
    pub reflections: usize,
    pub rotations: usize,
    pub improper_non_reflections: usize,
    pub rho2: usize,
    pub rho3: usize,
    pub rho5_1: usize,
    pub rho5_2: usize,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reflection_of_axis_root() {
        let m = reflection_matrix(&[int(2), int(0), int(0)]);
        let mut d = identity();
        d[0][0] = int(-1);
        assert_eq!(m, d);
    }

    #[test]
    fn roots_are_positive_and_have_norm_four() {
        let r = RootSystemH3::new();
        assert_eq!(r.positive_roots.len(), 15);
        for v in &r.positive_roots {
            assert_eq!(norm_sq(v), int(4));
            assert!(dot(v, &r.u0).signum() > 0);
        }
    }

    #[test]
    fn vertex_counts() {
        let r = RootSystemH3::new();
        let vs = VertexSets::new(&r);
        assert_eq!((vs.i.len(), vs.i_plus.len(), vs.k.len(), vs.k_plus.len()), (12, 6, 20, 10));
    }
}
