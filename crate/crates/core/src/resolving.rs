//! k-resolving sets, k-metric dimension, and basis constructions.
//!
//! An ordered vertex set `(v_1, ..., v_l)` is k-resolving when the distance
//! vectors of any two distinct vertices differ in at least k of the l
//! positions. The largest k for which any such set exists equals the minimum
//! size of a distinctive-vertex set over all vertex pairs; for paths, cycles
//! and grids the minimum set sizes have closed forms, and every constructed
//! basis here is certified by [`verify_k_resolving`] before it is returned.

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::graphs::{
    all_pairs_distances, build_cycle, build_grid, build_path, DistanceMatrix, Family, Graph,
};
use crate::Error;

/// Default vertex-count cap for exhaustive dimension search.
pub const DEFAULT_BRUTE_FORCE_CAP: usize = 16;

/// An ordered list of distinct vertices claimed to be k-resolving.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolvingSet {
    pub vertices: Vec<usize>,
    pub k: usize,
}

impl ResolvingSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Outcome of checking a vertex list against Definition 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum KResolution {
    Resolving,
    /// `x` and `y` are distinguished by fewer than k positions.
    Violation {
        x: usize,
        y: usize,
        differing: usize,
    },
}

impl KResolution {
    pub fn holds(&self) -> bool {
        matches!(self, KResolution::Resolving)
    }
}

fn validate_vertex_list(n: usize, vertices: &[usize]) -> Result<(), Error> {
    if vertices.is_empty() {
        return Err(Error::InvalidParameter("vertex list is empty".into()));
    }
    let mut seen = vec![false; n];
    for &v in vertices {
        if v >= n {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} out of range for {n} vertices"
            )));
        }
        if seen[v] {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} repeated in vertex list"
            )));
        }
        seen[v] = true;
    }
    Ok(())
}

/// The distinctive vertices of `x` and `y`: all `z` with `d(x,z) != d(y,z)`.
/// Always contains `x` and `y` themselves.
pub fn distinctive_vertices(dm: &DistanceMatrix, x: usize, y: usize) -> Result<Vec<usize>, Error> {
    let n = dm.n();
    if x >= n || y >= n {
        return Err(Error::InvalidParameter(format!(
            "vertex pair ({x}, {y}) out of range for {n} vertices"
        )));
    }
    if x == y {
        return Err(Error::InvalidParameter(
            "distinctive vertices need two distinct vertices".into(),
        ));
    }
    let (rx, ry) = (dm.row(x), dm.row(y));
    Ok((0..n).filter(|&z| rx[z] != ry[z]).collect())
}

/// Checks Definition 1: every pair of distinct graph vertices must have
/// distance lists over `vertices` differing in at least `k` positions.
pub fn verify_k_resolving(
    dm: &DistanceMatrix,
    vertices: &[usize],
    k: usize,
) -> Result<KResolution, Error> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let n = dm.n();
    validate_vertex_list(n, vertices)?;
    let ell = vertices.len();
    for x in 0..n {
        for y in (x + 1)..n {
            let (rx, ry) = (dm.row(x), dm.row(y));
            let mut differing = 0;
            for (i, &v) in vertices.iter().enumerate() {
                if rx[v] != ry[v] {
                    differing += 1;
                    if differing >= k {
                        break;
                    }
                } else if differing + (ell - i - 1) < k {
                    break;
                }
            }
            if differing < k {
                let full = vertices.iter().filter(|&&v| rx[v] != ry[v]).count();
                return Ok(KResolution::Violation {
                    x,
                    y,
                    differing: full,
                });
            }
        }
    }
    Ok(KResolution::Resolving)
}

/// The largest k for which the graph has a k-resolving set: the minimum
/// size of a distinctive-vertex set over all vertex pairs.
pub fn metric_dimensionality(dm: &DistanceMatrix) -> Result<usize, Error> {
    let n = dm.n();
    if n < 2 {
        return Err(Error::InvalidParameter(
            "metric dimensionality needs at least two vertices".into(),
        ));
    }
    let mut min = usize::MAX;
    for x in 0..n {
        for y in (x + 1)..n {
            let (rx, ry) = (dm.row(x), dm.row(y));
            let count = (0..n).filter(|&z| rx[z] != ry[z]).count();
            min = min.min(count);
        }
    }
    Ok(min)
}

/// Exhaustive k-metric dimension with the default vertex cap of
/// [`DEFAULT_BRUTE_FORCE_CAP`].
pub fn k_metric_dimension_bruteforce(dm: &DistanceMatrix, k: usize) -> Result<ResolvingSet, Error> {
    k_metric_dimension_bruteforce_with_cap(dm, k, DEFAULT_BRUTE_FORCE_CAP)
}

/// Finds a minimum k-resolving set by enumerating subsets in increasing
/// size, lexicographically within each size. The returned set's length is
/// `dim_k` of the graph.
pub fn k_metric_dimension_bruteforce_with_cap(
    dm: &DistanceMatrix,
    k: usize,
    cap: usize,
) -> Result<ResolvingSet, Error> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    let n = dm.n();
    let max_k = metric_dimensionality(dm)?;
    if k > max_k {
        return Err(Error::NoKResolvingSet {
            k,
            reason: format!("graph is only {max_k}-metric dimensional"),
        });
    }
    if n > cap {
        return Err(Error::InstanceTooLarge(format!(
            "{n} vertices exceed the brute-force cap of {cap}"
        )));
    }
    if n > 64 {
        return Err(Error::InstanceTooLarge(
            "brute-force search supports at most 64 vertices".into(),
        ));
    }

    // One bitmask of distinctive vertices per pair; a subset S is
    // k-resolving iff |D(x,y) & S| >= k for every pair.
    let mut pair_masks = Vec::with_capacity(n * (n - 1) / 2);
    for x in 0..n {
        for y in (x + 1)..n {
            let (rx, ry) = (dm.row(x), dm.row(y));
            let mut mask = 0u64;
            for z in 0..n {
                if rx[z] != ry[z] {
                    mask |= 1 << z;
                }
            }
            pair_masks.push(mask);
        }
    }

    for size in k..=n {
        for combo in (0..n).combinations(size) {
            let mask = combo.iter().fold(0u64, |m, &v| m | (1 << v));
            if pair_masks
                .iter()
                .all(|&pm| (pm & mask).count_ones() as usize >= k)
            {
                return Ok(ResolvingSet { vertices: combo, k });
            }
        }
    }
    // The full vertex set is always k-resolving for k <= max_k.
    unreachable!("exhaustive search failed to find a {k}-resolving set");
}

/// Verifies candidates in order, then falls back to exhaustive search over
/// all subsets of the target size.
fn certified_set(
    dm: &DistanceMatrix,
    k: usize,
    target: usize,
    candidates: Vec<Vec<usize>>,
) -> Result<ResolvingSet, Error> {
    for cand in candidates {
        if verify_k_resolving(dm, &cand, k)?.holds() {
            return Ok(ResolvingSet { vertices: cand, k });
        }
    }
    for combo in (0..dm.n()).combinations(target) {
        if verify_k_resolving(dm, &combo, k)?.holds() {
            return Ok(ResolvingSet { vertices: combo, k });
        }
    }
    Err(Error::ConstructionUnavailable(format!(
        "no {k}-resolving set of size {target} found"
    )))
}

/// A k-resolving set of size k+1 for the path on n vertices, valid for
/// 3 <= k <= n-1. Smaller k is rejected: the resulting codes cannot
/// correct any error.
pub fn path_basis(n: usize, k: usize) -> Result<ResolvingSet, Error> {
    if k < 3 {
        return Err(Error::UnsupportedK {
            k,
            reason: "path bases are built for k >= 3 only".into(),
        });
    }
    if k > n.saturating_sub(1) {
        return Err(Error::NoKResolvingSet {
            k,
            reason: format!(
                "a path on {n} vertices has k-resolving sets only for k <= {}",
                n - 1
            ),
        });
    }
    let target = k + 1;
    let dm = all_pairs_distances(&build_path(n)?);
    // a vertices from the front, target - a from the back.
    let candidates = (0..=target)
        .rev()
        .map(|a| {
            let mut c: Vec<usize> = (0..a).collect();
            c.extend((n - (target - a))..n);
            c.sort_unstable();
            c
        })
        .collect();
    certified_set(&dm, k, target, candidates)
}

/// A minimum k-resolving set for the cycle on n vertices: size k+1 for odd
/// n (k <= n-1) and for even n with k <= n/2 - 1; size k+2 for even n with
/// n/2 <= k <= n-2.
pub fn cycle_basis(n: usize, k: usize) -> Result<ResolvingSet, Error> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    if n < 3 {
        return Err(Error::InvalidParameter("cycle needs n >= 3".into()));
    }
    let target = if n % 2 == 1 {
        if k > n - 1 {
            return Err(Error::NoKResolvingSet {
                k,
                reason: format!(
                    "an odd cycle on {n} vertices has k-resolving sets only for k <= {}",
                    n - 1
                ),
            });
        }
        k + 1
    } else {
        let q = n / 2;
        if k > n - 2 {
            return Err(Error::NoKResolvingSet {
                k,
                reason: format!(
                    "an even cycle on {n} vertices has k-resolving sets only for k <= {}",
                    n - 2
                ),
            });
        }
        if k <= q - 1 {
            k + 1
        } else {
            k + 2
        }
    };
    let dm = all_pairs_distances(&build_cycle(n)?);
    // A contiguous arc first, then a near-evenly spaced set.
    let arc: Vec<usize> = (0..target).collect();
    let spread: Vec<usize> = (0..target).map(|i| i * n / target).collect();
    certified_set(&dm, k, target, vec![arc, spread])
}

/// The explicit 2k-vertex k-resolving set for the grid with s rows and t
/// columns, valid for 1 <= k <= s+t-2.
///
/// With s >= t (coordinates are swapped internally otherwise): for k <= s
/// the set is the first k rows crossed with the two outer columns; for
/// k = s + a the two outer columns in full, plus columns 1..=a crossed
/// with the two outer rows.
pub fn grid_basis(s: usize, t: usize, k: usize) -> Result<ResolvingSet, Error> {
    if k == 0 {
        return Err(Error::InvalidParameter("k must be positive".into()));
    }
    if s < 2 || t < 2 {
        return Err(Error::InvalidParameter(
            "grid needs s >= 2 and t >= 2".into(),
        ));
    }
    if k > s + t - 2 {
        return Err(Error::NoKResolvingSet {
            k,
            reason: format!("grid({s}x{t}) is only {}-metric dimensional", s + t - 2),
        });
    }
    let swapped = s < t;
    let (sb, tb) = if swapped { (t, s) } else { (s, t) };

    let mut cells: Vec<(usize, usize)> = Vec::with_capacity(2 * k);
    if k <= sb {
        for i in 0..k {
            cells.push((i, 0));
            cells.push((i, tb - 1));
        }
    } else {
        let alpha = k - sb;
        for i in 0..sb {
            cells.push((i, 0));
            cells.push((i, tb - 1));
        }
        for j in 1..=alpha {
            cells.push((0, j));
            cells.push((sb - 1, j));
        }
    }

    let mut vertices: Vec<usize> = cells
        .into_iter()
        .map(|(i, j)| {
            let (row, col) = if swapped { (j, i) } else { (i, j) };
            row * t + col
        })
        .collect();
    vertices.sort_unstable();

    let dm = all_pairs_distances(&build_grid(s, t)?);
    match verify_k_resolving(&dm, &vertices, k)? {
        KResolution::Resolving => Ok(ResolvingSet { vertices, k }),
        KResolution::Violation { x, y, differing } => {
            Err(Error::NotKResolving { k, x, y, differing })
        }
    }
}

/// A certified k-resolving set for any constructed graph: closed-form for
/// the three families, exhaustive search (subject to the default cap) for
/// custom graphs.
pub fn construct_basis(g: &Graph, dm: &DistanceMatrix, k: usize) -> Result<ResolvingSet, Error> {
    match g.family() {
        Family::Path { n } => {
            if k >= 3 {
                path_basis(n, k)
            } else {
                // dim_k(P_n) = k for k in {1, 2}: one endpoint, or both.
                if k == 0 {
                    return Err(Error::InvalidParameter("k must be positive".into()));
                }
                let cand = if k == 1 { vec![0] } else { vec![0, n - 1] };
                certified_set(dm, k, k, vec![cand])
            }
        }
        Family::Cycle { n } => cycle_basis(n, k),
        Family::Grid { s, t } => grid_basis(s, t, k),
        Family::Custom { .. } => k_metric_dimension_bruteforce(dm, k),
    }
}

/// Where a dimension value came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DimSource {
    Construction,
    BruteForce,
    /// Closed-form construction confirmed by brute force.
    Confirmed,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionEntry {
    pub k: usize,
    pub dim: usize,
    pub basis: ResolvingSet,
    pub source: DimSource,
}

/// Per-k dimensions and witness bases for one graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub graph: Family,
    /// Largest k admitting a k-resolving set.
    pub max_k: usize,
    pub entries: Vec<DimensionEntry>,
}

#[derive(Debug, Clone, Copy)]
pub struct ReportOptions {
    /// Skip brute-force search and trust the closed-form constructions.
    pub construct_only: bool,
    pub brute_cap: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            construct_only: false,
            brute_cap: DEFAULT_BRUTE_FORCE_CAP,
        }
    }
}

/// Computes dim_k and a witness basis for each requested k.
///
/// Family graphs get their closed-form construction; unless
/// `construct_only` is set, an exhaustive search (subject to `brute_cap`)
/// independently confirms each value.
pub fn dimension_report(
    g: &Graph,
    ks: &[usize],
    options: &ReportOptions,
) -> Result<DimensionReport, Error> {
    let dm = all_pairs_distances(g);
    let max_k = metric_dimensionality(&dm)?;
    let mut entries = Vec::with_capacity(ks.len());
    for &k in ks {
        if k == 0 {
            return Err(Error::InvalidParameter("k must be positive".into()));
        }
        if k > max_k {
            return Err(Error::NoKResolvingSet {
                k,
                reason: format!("{} is only {max_k}-metric dimensional", g.family()),
            });
        }
        let constructed = match g.family() {
            Family::Custom { .. } => None,
            _ => Some(construct_basis(g, &dm, k)?),
        };
        let brute = if options.construct_only {
            None
        } else {
            Some(k_metric_dimension_bruteforce_with_cap(
                &dm,
                k,
                options.brute_cap,
            )?)
        };
        let (basis, source) = match (constructed, brute) {
            (Some(c), Some(b)) => {
                if c.len() != b.len() {
                    return Err(Error::ConstructionUnavailable(format!(
                        "constructed basis size {} disagrees with brute-force minimum {} at k={k}",
                        c.len(),
                        b.len()
                    )));
                }
                (c, DimSource::Confirmed)
            }
            (Some(c), None) => (c, DimSource::Construction),
            (None, Some(b)) => (b, DimSource::BruteForce),
            (None, None) => {
                return Err(Error::ConstructionUnavailable(
                    "custom graphs have no closed-form construction; enable brute force".into(),
                ))
            }
        };
        entries.push(DimensionEntry {
            k,
            dim: basis.len(),
            basis,
            source,
        });
    }
    Ok(DimensionReport {
        graph: g.family(),
        max_k,
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::build_custom;

    fn complete_graph(n: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        build_custom(n, &edges).unwrap()
    }

    fn dm_of(g: &Graph) -> DistanceMatrix {
        all_pairs_distances(g)
    }

    #[test]
    fn distinctive_vertices_examples() {
        // grid(3,2): cell (1,0) has label 2, cell (0,1) has label 1.
        let dm = dm_of(&build_grid(3, 2).unwrap());
        let d = distinctive_vertices(&dm, 2, 1).unwrap();
        assert_eq!(d.len(), 3 + 2 - 2);
        assert!(d.contains(&1) && d.contains(&2));

        let dm = dm_of(&build_path(2).unwrap());
        assert_eq!(distinctive_vertices(&dm, 0, 1).unwrap(), vec![0, 1]);

        let dm = dm_of(&complete_graph(4));
        for x in 0..4 {
            for y in 0..4 {
                if x != y {
                    let mut expected = vec![x, y];
                    expected.sort_unstable();
                    assert_eq!(distinctive_vertices(&dm, x, y).unwrap(), expected);
                }
            }
        }

        assert!(distinctive_vertices(&dm, 1, 1).is_err());
        assert!(distinctive_vertices(&dm, 0, 9).is_err());
    }

    #[test]
    fn verify_examples() {
        let p5 = dm_of(&build_path(5).unwrap());
        assert!(verify_k_resolving(&p5, &[0, 1, 2, 3, 4], 4)
            .unwrap()
            .holds());
        assert!(!verify_k_resolving(&p5, &[0, 1, 2, 3, 4], 5)
            .unwrap()
            .holds());

        let k3 = dm_of(&complete_graph(3));
        assert!(verify_k_resolving(&k3, &[0, 1, 2], 2).unwrap().holds());
        let r = verify_k_resolving(&k3, &[0, 1, 2], 3).unwrap();
        match r {
            KResolution::Violation { differing, .. } => assert_eq!(differing, 2),
            KResolution::Resolving => panic!("K_3 is not 3-resolvable"),
        }

        let p3 = dm_of(&build_path(3).unwrap());
        assert!(verify_k_resolving(&p3, &[0], 1).unwrap().holds());

        assert!(verify_k_resolving(&p3, &[], 1).is_err());
        assert!(verify_k_resolving(&p3, &[0, 0], 1).is_err());
        assert!(verify_k_resolving(&p3, &[7], 1).is_err());
        assert!(verify_k_resolving(&p3, &[0], 0).is_err());
    }

    #[test]
    fn verify_monotone_in_k_and_supersets() {
        let dm = dm_of(&build_grid(3, 3).unwrap());
        let set = grid_basis(3, 3, 3).unwrap().vertices;
        for k in 1..=3 {
            assert!(verify_k_resolving(&dm, &set, k).unwrap().holds());
        }
        // Any superset stays 3-resolving.
        let mut superset = set.clone();
        for v in 0..9 {
            if !superset.contains(&v) {
                superset.push(v);
            }
        }
        assert!(verify_k_resolving(&dm, &superset, 3).unwrap().holds());
    }

    #[test]
    fn dimensionality_examples() {
        assert_eq!(
            metric_dimensionality(&dm_of(&build_grid(4, 3).unwrap())).unwrap(),
            5
        );
        for n in 3..=8 {
            assert_eq!(
                metric_dimensionality(&dm_of(&complete_graph(n))).unwrap(),
                2
            );
        }
        for n in 3..=10 {
            assert_eq!(
                metric_dimensionality(&dm_of(&build_path(n).unwrap())).unwrap(),
                n - 1
            );
        }
        // P_2 is K_2: the only pair's distinctive set is both vertices, and
        // no pair in any graph has fewer than 2 distinctive vertices.
        assert_eq!(
            metric_dimensionality(&dm_of(&build_path(2).unwrap())).unwrap(),
            2
        );
        assert_eq!(
            metric_dimensionality(&dm_of(&build_cycle(5).unwrap())).unwrap(),
            4
        );
        assert_eq!(
            metric_dimensionality(&dm_of(&build_cycle(6).unwrap())).unwrap(),
            4
        );
        assert!(metric_dimensionality(&dm_of(&build_path(1).unwrap())).is_err());
    }

    #[test]
    fn dimensionality_is_attained_minimum() {
        for g in [
            build_path(7).unwrap(),
            build_cycle(8).unwrap(),
            build_grid(3, 4).unwrap(),
            complete_graph(5),
        ] {
            let dm = dm_of(&g);
            let max_k = metric_dimensionality(&dm).unwrap();
            let mut attained = false;
            for x in 0..g.n() {
                for y in (x + 1)..g.n() {
                    let size = distinctive_vertices(&dm, x, y).unwrap().len();
                    assert!(size >= max_k);
                    attained |= size == max_k;
                }
            }
            assert!(attained);
        }
    }

    #[test]
    fn bruteforce_examples() {
        let p5 = dm_of(&build_path(5).unwrap());
        assert_eq!(k_metric_dimension_bruteforce(&p5, 4).unwrap().len(), 5);

        let g33 = dm_of(&build_grid(3, 3).unwrap());
        assert_eq!(k_metric_dimension_bruteforce(&g33, 2).unwrap().len(), 4);

        let c6 = dm_of(&build_cycle(6).unwrap());
        assert!(matches!(
            k_metric_dimension_bruteforce(&c6, 5),
            Err(Error::NoKResolvingSet { k: 5, .. })
        ));

        let p17 = dm_of(&build_path(17).unwrap());
        assert!(matches!(
            k_metric_dimension_bruteforce(&p17, 3),
            Err(Error::InstanceTooLarge(_))
        ));
        assert!(k_metric_dimension_bruteforce_with_cap(&p17, 3, 17).is_ok());
    }

    #[test]
    fn bruteforce_result_is_certified_and_minimal() {
        let dm = dm_of(&build_cycle(7).unwrap());
        for k in 1..=6 {
            let set = k_metric_dimension_bruteforce(&dm, k).unwrap();
            assert!(verify_k_resolving(&dm, &set.vertices, k).unwrap().holds());
            assert!(set.len() >= k, "dim_k >= k must hold");
            // Nothing smaller works: spot-check by exhausting size len-1.
            use itertools::Itertools;
            for combo in (0..dm.n()).combinations(set.len() - 1) {
                assert!(!verify_k_resolving(&dm, &combo, k).unwrap().holds());
            }
        }
    }

    #[test]
    fn path_basis_examples() {
        let b = path_basis(5, 4).unwrap();
        assert_eq!(b.vertices, vec![0, 1, 2, 3, 4]);

        let b = path_basis(8, 3).unwrap();
        assert_eq!(b.len(), 4);
        let dm = dm_of(&build_path(8).unwrap());
        assert!(verify_k_resolving(&dm, &b.vertices, 3).unwrap().holds());
        // Cross-check minimality.
        assert_eq!(k_metric_dimension_bruteforce(&dm, 3).unwrap().len(), 4);

        assert!(matches!(
            path_basis(5, 5),
            Err(Error::NoKResolvingSet { .. })
        ));
        assert!(matches!(path_basis(8, 2), Err(Error::UnsupportedK { .. })));
    }

    #[test]
    fn cycle_basis_examples() {
        let b = cycle_basis(5, 4).unwrap();
        assert_eq!(b.len(), 5);

        let b = cycle_basis(6, 4).unwrap();
        assert_eq!(b.len(), 6);

        assert!(matches!(
            cycle_basis(6, 5),
            Err(Error::NoKResolvingSet { .. })
        ));

        // Odd cycles: size k+1 throughout. Even: k+1 below the midpoint,
        // k+2 from there on.
        for n in [5usize, 7, 9, 11] {
            let dm = dm_of(&build_cycle(n).unwrap());
            for k in 1..=(n - 1) {
                let b = cycle_basis(n, k).unwrap();
                assert_eq!(b.len(), k + 1, "C_{n} k={k}");
                assert!(verify_k_resolving(&dm, &b.vertices, k).unwrap().holds());
            }
        }
        for n in [4usize, 6, 8, 10] {
            let q = n / 2;
            let dm = dm_of(&build_cycle(n).unwrap());
            for k in 1..=(n - 2) {
                let b = cycle_basis(n, k).unwrap();
                let expected = if k <= q - 1 { k + 1 } else { k + 2 };
                assert_eq!(b.len(), expected, "C_{n} k={k}");
                assert!(verify_k_resolving(&dm, &b.vertices, k).unwrap().holds());
            }
        }
    }

    #[test]
    fn path_basis_minimal_at_small_scale() {
        for n in 4..=10 {
            let dm = dm_of(&build_path(n).unwrap());
            for k in 3..n {
                let b = path_basis(n, k).unwrap();
                assert_eq!(b.len(), k + 1, "P_{n} k={k}");
                assert!(verify_k_resolving(&dm, &b.vertices, k).unwrap().holds());
                let min = k_metric_dimension_bruteforce(&dm, k).unwrap();
                assert_eq!(b.len(), min.len(), "P_{n} k={k}");
            }
        }
    }

    #[test]
    fn cycle_basis_minimal_at_small_scale() {
        for n in 4..=9 {
            let dm = dm_of(&build_cycle(n).unwrap());
            let top = if n % 2 == 1 { n - 1 } else { n - 2 };
            for k in 1..=top {
                let b = cycle_basis(n, k).unwrap();
                let min = k_metric_dimension_bruteforce(&dm, k).unwrap();
                assert_eq!(b.len(), min.len(), "C_{n} k={k}");
            }
        }
    }

    #[test]
    fn grid_basis_examples() {
        let b = grid_basis(4, 3, 3).unwrap();
        // Rows 0..3 crossed with columns {0, 2}: cells (0,0) (0,2) (1,0)
        // (1,2) (2,0) (2,2), labels i*3+j.
        assert_eq!(b.vertices, vec![0, 2, 3, 5, 6, 8]);

        let b = grid_basis(3, 3, 4).unwrap();
        assert_eq!(b.len(), 8);

        assert!(matches!(
            grid_basis(3, 3, 5),
            Err(Error::NoKResolvingSet { .. })
        ));
    }

    #[test]
    fn grid_basis_is_2k_and_certified() {
        for s in 2..=6 {
            for t in 2..=6 {
                let dm = dm_of(&build_grid(s, t).unwrap());
                for k in 1..=(s + t - 2) {
                    let b = grid_basis(s, t, k).unwrap();
                    assert_eq!(b.len(), 2 * k, "grid({s}x{t}) k={k}");
                    assert!(verify_k_resolving(&dm, &b.vertices, k).unwrap().holds());
                }
            }
        }
    }

    #[test]
    fn grid_basis_transposes_cleanly() {
        let tall = grid_basis(3, 4, 3).unwrap();
        let dm = dm_of(&build_grid(3, 4).unwrap());
        assert!(verify_k_resolving(&dm, &tall.vertices, 3).unwrap().holds());
        assert_eq!(tall.len(), 6);
        // Same cells as grid(4,3) with coordinates swapped.
        let wide = grid_basis(4, 3, 3).unwrap();
        let mut transposed: Vec<usize> = wide
            .vertices
            .iter()
            .map(|&v| {
                let (i, j) = (v / 3, v % 3);
                j * 4 + i
            })
            .collect();
        transposed.sort_unstable();
        assert_eq!(tall.vertices, transposed);
    }

    #[test]
    fn resolving_sets_meet_every_distinctive_set() {
        // If S is k-resolving then |D(x,y) ∩ S| >= k for every pair.
        let g = build_grid(3, 3).unwrap();
        let dm = dm_of(&g);
        let set = grid_basis(3, 3, 3).unwrap();
        for x in 0..g.n() {
            for y in (x + 1)..g.n() {
                let d = distinctive_vertices(&dm, x, y).unwrap();
                let hits = set.vertices.iter().filter(|v| d.contains(v)).count();
                assert!(hits >= 3);
            }
        }
    }

    #[test]
    fn report_for_grid() {
        let g = build_grid(3, 3).unwrap();
        let report = dimension_report(&g, &[1, 2, 3, 4], &ReportOptions::default()).unwrap();
        assert_eq!(report.max_k, 4);
        let dims: Vec<usize> = report.entries.iter().map(|e| e.dim).collect();
        assert_eq!(dims, vec![2, 4, 6, 8]);
        assert!(report
            .entries
            .iter()
            .all(|e| e.source == DimSource::Confirmed));
        // dim_k is monotone and at least k.
        for w in report.entries.windows(2) {
            assert!(w[0].dim <= w[1].dim);
        }
        for e in &report.entries {
            assert!(e.dim >= e.k);
        }
    }

    #[test]
    fn report_errors() {
        let g = build_cycle(6).unwrap();
        assert!(matches!(
            dimension_report(&g, &[5], &ReportOptions::default()),
            Err(Error::NoKResolvingSet { k: 5, .. })
        ));

        let g = build_grid(5, 5).unwrap();
        assert!(matches!(
            dimension_report(&g, &[3], &ReportOptions::default()),
            Err(Error::InstanceTooLarge(_))
        ));
        let report = dimension_report(
            &g,
            &[3],
            &ReportOptions {
                construct_only: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(report.entries[0].dim, 6);
        assert_eq!(report.entries[0].source, DimSource::Construction);
    }

    #[test]
    fn report_for_paths_small_k() {
        let g = build_path(5).unwrap();
        let report = dimension_report(&g, &[1, 2, 4], &ReportOptions::default()).unwrap();
        let dims: Vec<usize> = report.entries.iter().map(|e| e.dim).collect();
        assert_eq!(dims, vec![1, 2, 5]);
    }

    #[test]
    fn report_for_custom_graph() {
        let g = build_custom(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let report = dimension_report(&g, &[2], &ReportOptions::default()).unwrap();
        assert_eq!(report.entries[0].source, DimSource::BruteForce);
        assert_eq!(report.entries[0].dim, 4);
    }
}
