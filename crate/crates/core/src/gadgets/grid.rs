use crate::graph::Graph;

/// Id of grid vertex `v^{i,j}` (1-based row `i`, column `j`) in an
/// `n x m` grid: `(i - 1) * m + (j - 1)`.
pub fn grid_id(m: usize, i: usize, j: usize) -> usize {
    (i - 1) * m + (j - 1)
}

/// The `n x m` grid graph; row 1 is the top row.
pub fn gen_grid(n: usize, m: usize) -> Graph {
    assert!(n >= 1 && m >= 1, "grid dimensions must be positive");
    let mut es = Vec::with_capacity(n * (m - 1) + m * (n - 1));
    for i in 1..=n {
        for j in 1..=m {
            if j < m {
                es.push((grid_id(m, i, j), grid_id(m, i, j + 1)));
            }
            if i < n {
                es.push((grid_id(m, i, j), grid_id(m, i + 1, j)));
            }
        }
    }
    Graph::new(n * m, es).expect("grid edges are simple")
}

/// Recovers `(n, m)` when `g` is exactly `gen_grid(n, m)` under the
/// canonical labelling. Prefers the factorisation with the fewest rows.
pub fn grid_dims(g: &Graph) -> Option<(usize, usize)> {
    let total = g.n();
    (1..=total)
        .filter(|n| total % n == 0)
        .map(|n| (n, total / n))
        .find(|&(n, m)| gen_grid(n, m) == *g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grids() {
        assert_eq!(gen_grid(1, 1), Graph::empty(1));
        assert_eq!(gen_grid(2, 2).degree_sequence(), vec![2; 4]);
        assert_eq!(gen_grid(2, 2).girth(), Some(4));
        let g = gen_grid(3, 4);
        assert_eq!((g.n(), g.m()), (12, 17));
        assert!(g.is_connected());
    }

    #[test]
    fn dims_roundtrip() {
        assert_eq!(grid_dims(&gen_grid(3, 5)), Some((3, 5)));
        assert_eq!(grid_dims(&gen_grid(4, 4)), Some((4, 4)));
        assert_eq!(grid_dims(&Graph::cycle(6)), None);
    }
}
