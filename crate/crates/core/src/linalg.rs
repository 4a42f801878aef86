//! Gaussian elimination for the small (at most 8×8) real systems that arise
//! from loop division.

pub(crate) const MAX: usize = 8;

/// Solves `m · x = rhs` for the leading `n × n` block.
///
/// Returns `None` when a pivot falls below `1e-13` times the largest entry.
pub(crate) fn solve(n: usize, mut m: [[f64; MAX]; MAX], mut rhs: [f64; MAX]) -> Option<[f64; MAX]> {
    let scale = m[..n]
        .iter()
        .flat_map(|row| row[..n].iter())
        .fold(0.0f64, |acc, v| acc.max(libm::fabs(*v)));
    if scale == 0.0 {
        return None;
    }
    let tiny = scale * 1e-13;

    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| libm::fabs(m[a][col]).total_cmp(&libm::fabs(m[b][col])))?;
        if libm::fabs(m[pivot][col]) <= tiny {
            return None;
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..n {
            let f = m[row][col] / m[col][col];
            if f == 0.0 {
                continue;
            }
            for k in col..n {
                m[row][k] -= f * m[col][k];
            }
            rhs[row] -= f * rhs[col];
        }
    }

    let mut x = [0.0; MAX];
    for row in (0..n).rev() {
        let tail: f64 = (row + 1..n).map(|k| m[row][k] * x[k]).sum();
        x[row] = (rhs[row] - tail) / m[row][row];
    }
    Some(x)
}
