//! Word-packed elimination over `F_2`. Bit `j` of a row is column `j`.

/// Reduced row echelon form in place. Returns the rank; the first `rank`
/// rows hold the echelon basis with strictly increasing pivots, the rest are zero.
pub fn rref_in_place(rows: &mut [u64], ncols: usize) -> usize {
    let mut rank = 0;
    for col in 0..ncols {
        if rank == rows.len() {
            break;
        }
        let bit = 1u64 << col;
        let Some(p) = (rank..rows.len()).find(|&r| rows[r] & bit != 0) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank];
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && *row & bit != 0 {
                *row ^= pivot;
            }
        }
        rank += 1;
    }
    rank
}

/// Pivot columns of a row set already in reduced echelon form.
pub fn pivots(rows: &[u64]) -> Vec<usize> {
    rows.iter()
        .take_while(|&&r| r != 0)
        .map(|r| r.trailing_zeros() as usize)
        .collect()
}

pub fn pack(row: &[u8]) -> u64 {
    debug_assert!(row.len() <= 64);
    row.iter()
        .enumerate()
        .fold(0u64, |acc, (j, &v)| acc | (((v & 1) as u64) << j))
}

pub fn unpack(word: u64, ncols: usize, out: &mut [u8]) {
    for (j, o) in out.iter_mut().enumerate().take(ncols) {
        *o = ((word >> j) & 1) as u8;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_repeated_row() {
        let mut rows = [0b11u64, 0b11];
        assert_eq!(rref_in_place(&mut rows, 2), 1);
        assert_eq!(rows, [0b11, 0]);
    }

    #[test]
    fn clears_above_pivots() {
        // rows (1,1,0) and (0,1,1) -> (1,0,1), (0,1,1)
        let mut rows = [pack(&[1, 1, 0]), pack(&[0, 1, 1])];
        assert_eq!(rref_in_place(&mut rows, 3), 2);
        assert_eq!(rows[0], pack(&[1, 0, 1]));
        assert_eq!(rows[1], pack(&[0, 1, 1]));
        assert_eq!(pivots(&rows), vec![0, 1]);
    }
}
