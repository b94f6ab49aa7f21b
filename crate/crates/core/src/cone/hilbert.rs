//! Hilbert bases of pointed cones via a pulling triangulation of the rays
//! and enumeration of the fundamental parallelepipeds of its simplices.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use super::linalg::{dot, mat_vec, rank, scaled_inverse};
use super::Lattice;
use crate::error::Result;

/// Pulling triangulation: simplices as sorted lists of ray indices.
pub fn triangulate(facets: &[Vec<i64>], rays: &[Vec<i64>]) -> Result<Vec<Vec<usize>>> {
    let dim = rays.first().map_or(0, Vec::len);
    let tight: Vec<Vec<bool>> = facets
        .iter()
        .map(|f| rays.iter().map(|r| dot(f, r) == 0).collect())
        .collect();
    let all: Vec<usize> = (0..rays.len()).collect();
    let mut memo = HashMap::new();
    pull(&all, dim, rays, &tight, &mut memo)
}

fn pull(
    face: &[usize],
    dim: usize,
    rays: &[Vec<i64>],
    tight: &[Vec<bool>],
    memo: &mut HashMap<Vec<usize>, Vec<Vec<usize>>>,
) -> Result<Vec<Vec<usize>>> {
    if face.len() == dim {
        return Ok(vec![face.to_vec()]);
    }
    if let Some(t) = memo.get(face) {
        return Ok(t.clone());
    }
    let apex = face[0];
    let mut subfaces: Vec<Vec<usize>> = Vec::new();
    for t in tight {
        if t[apex] {
            continue;
        }
        let sub: Vec<usize> = face.iter().copied().filter(|&k| t[k]).collect();
        if sub.len() + 1 < dim || subfaces.contains(&sub) {
            continue;
        }
        let vecs: Vec<&[i64]> = sub.iter().map(|&k| rays[k].as_slice()).collect();
        if rank(&vecs)? + 1 == dim {
            subfaces.push(sub);
        }
    }
    let mut out = Vec::new();
    for sub in subfaces {
        for mut s in pull(&sub, dim - 1, rays, tight, memo)? {
            s.push(apex);
            s.sort_unstable();
            out.push(s);
        }
    }
    memo.insert(face.to_vec(), out.clone());
    Ok(out)
}

/// Lattice points of `lattice` in the half-open parallelepiped spanned by
/// the columns `gens`, excluding 0.
pub fn parallelepiped_points(gens: &[Vec<i64>], lattice: Lattice) -> Result<Vec<Vec<i64>>> {
    let d = gens.len();
    // rows of the matrix whose columns are the generators
    let g: Vec<Vec<i64>> = (0..d).map(|i| gens.iter().map(|v| v[i]).collect()).collect();
    let (det, x) = scaled_inverse(&g)?.expect("simplex generators are independent");
    // coefficient vectors modulo det; G^{-1} e_j = x[., j] / det
    let steps: Vec<Vec<i128>> = (0..d)
        .map(|j| x.iter().map(|r| r[j].rem_euclid(det)).collect())
        .collect();
    let zero = vec![0i128; d];
    let mut seen: HashSet<Vec<i128>> = HashSet::from([zero.clone()]);
    let mut stack = vec![zero];
    while let Some(c) = stack.pop() {
        for s in &steps {
            let next: Vec<i128> = c.iter().zip(s).map(|(a, b)| (a + b) % det).collect();
            if seen.insert(next.clone()) {
                stack.push(next);
            }
        }
    }
    let mut out = Vec::new();
    for c in seen {
        if c.iter().all(|&v| v == 0) {
            continue;
        }
        let p: Vec<i64> = mat_vec(&g, &c)?.into_iter().map(|v| (v / det) as i64).collect();
        if lattice.contains(&p) {
            out.push(p);
        }
    }
    Ok(out)
}

/// Rescales each ray to the first of its positive multiples in `lattice`.
pub fn lattice_generators(rays: &[Vec<i64>], lattice: Lattice) -> Vec<Vec<i64>> {
    rays.iter()
        .map(|r| if lattice.contains(r) { r.clone() } else { r.iter().map(|x| 2 * x).collect() })
        .collect()
}

/// The Hilbert basis of `lattice ∩ {a·x >= 0}`, sorted by degree then
/// lexicographically. `rays` are the extremal rays of the cone.
pub fn hilbert_basis(facets: &[Vec<i64>], rays: &[Vec<i64>], lattice: Lattice) -> Result<Vec<Vec<i64>>> {
    let gens = lattice_generators(rays, lattice);
    let simplices = triangulate(facets, rays)?;
    let found: Vec<Vec<Vec<i64>>> = simplices
        .par_iter()
        .map(|s| {
            let cols: Vec<Vec<i64>> = s.iter().map(|&k| gens[k].clone()).collect();
            parallelepiped_points(&cols, lattice)
        })
        .collect::<Result<_>>()?;
    let mut candidates: HashSet<Vec<i64>> = gens.iter().cloned().collect();
    candidates.extend(found.into_iter().flatten());
    Ok(reduce(facets, candidates.into_iter().collect()))
}

/// Positive grading: the sum of all facet normals.
pub fn grading(facets: &[Vec<i64>]) -> Vec<i64> {
    let dim = facets.first().map_or(0, Vec::len);
    (0..dim).map(|i| facets.iter().map(|f| f[i]).sum()).collect()
}

/// Keeps the irreducible elements of a finite set of nonzero semigroup
/// elements containing the Hilbert basis.
pub fn reduce(facets: &[Vec<i64>], mut candidates: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
    let w = grading(facets);
    candidates.sort_by(|a, b| dot(&w, a).cmp(&dot(&w, b)).then_with(|| a.cmp(b)));
    candidates.dedup();
    // facet values of each accepted element, to test x - y in the cone
    let mut basis: Vec<(Vec<i64>, Vec<i64>)> = Vec::new();
    for x in candidates {
        let vals: Vec<i64> = facets.iter().map(|f| dot(f, &x)).collect();
        let reducible = basis
            .iter()
            .any(|(_, bv)| bv.iter().zip(&vals).all(|(b, v)| v >= b) && bv != &vals);
        if !reducible {
            basis.push((x, vals));
        }
    }
    basis.into_iter().map(|(x, _)| x).collect()
}

#[cfg(test)]
mod tests {
    use super::super::dd::rays_from_facets;
    use super::*;

    fn triangle() -> Vec<Vec<i64>> {
        vec![
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
            vec![-1, 1, 1],
            vec![1, -1, 1],
            vec![1, 1, -1],
        ]
    }

    #[test]
    fn two_dimensional_cone() {
        // cone spanned by (1,0) and (1,3)
        let f = vec![vec![0, 1], vec![3, -1]];
        let rays = rays_from_facets(&f).unwrap();
        let hb = hilbert_basis(&f, &rays, Lattice::Full).unwrap();
        let mut hb = hb;
        hb.sort();
        assert_eq!(hb, vec![vec![1, 0], vec![1, 1], vec![1, 2], vec![1, 3]]);
    }

    #[test]
    fn parallelepiped_size_is_determinant() {
        let gens = vec![vec![1, 0, 0], vec![1, 2, 0], vec![0, 1, 3]];
        assert_eq!(parallelepiped_points(&gens, Lattice::Full).unwrap().len(), 6 - 1);
    }

    #[test]
    fn triangle_cone_bases() {
        let f = triangle();
        let rays = rays_from_facets(&f).unwrap();
        let mut even = hilbert_basis(&f, &rays, Lattice::Even).unwrap();
        even.sort();
        assert_eq!(even, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
        let mut full = hilbert_basis(&f, &rays, Lattice::Full).unwrap();
        full.sort();
        assert_eq!(full, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0], vec![1, 1, 1]]);
    }

    #[test]
    fn triangulation_of_square_cone() {
        let f = vec![vec![1, 1, 0], vec![1, -1, 0], vec![1, 0, 1], vec![1, 0, -1]];
        let rays = rays_from_facets(&f).unwrap();
        let t = triangulate(&f, &rays).unwrap();
        assert_eq!(t.len(), 2);
        for s in &t {
            assert_eq!(s.len(), 3);
            assert!(s.contains(&0));
        }
    }
}
