//! Brute-force ground truth for small instances.
//!
//! Seats `0..2n` sit on a cycle; people `0..n` are women and `n..2n` men, with
//! person `i` married to person `i ± n`. Rotations and reflections of a
//! seating are counted as distinct.

use crate::error::{Error, Result};
use crate::exactalg::ExactInt;

/// One instance: `n` couples, no `k` consecutive people of one gender.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeatingProblem {
    pub k: usize,
    pub n: usize,
}

/// Largest `n` accepted by [`brute_force`].
pub const BRUTE_FORCE_MAX_N: usize = 5;

impl SeatingProblem {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::Domain(format!("run bound k must be >= 2, got {k}")));
        }
        if !(1..=BRUTE_FORCE_MAX_N).contains(&n) {
            return Err(Error::Domain(format!(
                "brute force supports 1 <= n <= {BRUTE_FORCE_MAX_N}, got {n}"
            )));
        }
        Ok(SeatingProblem { k, n })
    }

    fn is_man(&self, person: usize) -> bool {
        person >= self.n
    }

    fn spouses(&self, a: usize, b: usize) -> bool {
        a % self.n == b % self.n
    }

    /// True if the `k` seats ending at `end` (inclusive, cyclic) all hold
    /// people of one gender.
    fn run_ends_at(&self, seats: &[usize], end: usize) -> bool {
        let len = seats.len();
        let g = self.is_man(seats[end]);
        (1..self.k).all(|d| self.is_man(seats[(end + len * self.k - d) % len]) == g)
    }

    fn count(&self) -> u64 {
        let size = 2 * self.n;
        let mut seats = Vec::with_capacity(size);
        let mut used = vec![false; size];
        self.dfs(&mut seats, &mut used)
    }

    fn dfs(&self, seats: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        let size = used.len();
        if seats.len() == size {
            let ok = !self.spouses(seats[size - 1], seats[0])
                && (0..size).all(|end| !self.run_ends_at(seats, end));
            return ok as u64;
        }
        let mut total = 0;
        for person in 0..size {
            if used[person] {
                continue;
            }
            if let Some(&prev) = seats.last() {
                if self.spouses(prev, person) {
                    continue;
                }
            }
            seats.push(person);
            let i = seats.len() - 1;
            if i + 1 < self.k || !self.run_ends_at_linear(seats, i) {
                used[person] = true;
                total += self.dfs(seats, used);
                used[person] = false;
            }
            seats.pop();
        }
        total
    }

    /// Run check over already-placed seats only, no wrap-around.
    fn run_ends_at_linear(&self, seats: &[usize], end: usize) -> bool {
        let g = self.is_man(seats[end]);
        (1..self.k).all(|d| self.is_man(seats[end - d]) == g)
    }
}

/// Counts seatings of `n` couples with no adjacent spouses and no `k`
/// cyclically consecutive people of the same gender, by exhaustive search.
pub fn brute_force(k: usize, n: usize) -> Result<ExactInt> {
    Ok(SeatingProblem::new(k, n)?.count().into())
}

/// Alternating seatings of `n` couples in which couples `0..j` all sit
/// together (other couples unrestricted).
pub fn alternating_with_close(n: usize, j: usize) -> Result<ExactInt> {
    if !(1..=BRUTE_FORCE_MAX_N).contains(&n) || j > n {
        return Err(Error::Domain(format!("need 1 <= n <= {BRUTE_FORCE_MAX_N}, j <= n")));
    }
    fn go(n: usize, j: usize, seats: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        let size = 2 * n;
        if seats.len() == size {
            let adjacent = |a: usize, b: usize| {
                let pa = seats.iter().position(|&p| p == a).unwrap();
                let pb = seats.iter().position(|&p| p == b).unwrap();
                (pa + 1) % size == pb || (pb + 1) % size == pa
            };
            return (0..j).all(|c| adjacent(c, c + n)) as u64;
        }
        let mut total = 0;
        for person in 0..size {
            let alternates = seats.last().is_none_or(|&prev| (prev >= n) != (person >= n));
            if used[person] || !alternates {
                continue;
            }
            used[person] = true;
            seats.push(person);
            total += go(n, j, seats, used);
            seats.pop();
            used[person] = false;
        }
        total
    }
    let mut used = vec![false; 2 * n];
    Ok(go(n, j, &mut Vec::new(), &mut used).into())
}

/// Largest `n` accepted by [`pattern_oracle`].
pub const PATTERN_MAX_N: usize = 6;

/// Counts rooted cyclic words of length `2n` over `{f, m}` with `n` of each
/// letter and no `k` cyclically consecutive equal letters, together with a
/// choice of `j` mixed adjacent pairs no two of which share a position.
pub fn pattern_oracle(k: usize, n: usize, j: usize) -> Result<ExactInt> {
    if k < 2 || !(1..=PATTERN_MAX_N).contains(&n) || j > n {
        return Err(Error::Domain(format!(
            "need k >= 2, 1 <= n <= {PATTERN_MAX_N}, j <= n; got k = {k}, n = {n}, j = {j}"
        )));
    }
    let size = 2 * n;
    let full = (1u32 << size) - 1;
    let bit = |w: u32, i: usize| (w >> (i % size)) & 1;
    let rotate = |mask: u32| ((mask << 1) | (mask >> (size - 1))) & full;
    let mut total = 0u64;
    for word in 0..=full {
        if word.count_ones() as usize != n {
            continue;
        }
        let has_run = (0..size).any(|s| (1..k).all(|d| bit(word, s + d) == bit(word, s)));
        if has_run {
            continue;
        }
        // pair i covers positions i and i + 1
        let mixed: u32 =
            (0..size).filter(|&i| bit(word, i) != bit(word, i + 1)).fold(0, |acc, i| acc | 1 << i);
        let mut sub = mixed;
        loop {
            if sub.count_ones() as usize == j && sub & rotate(sub) == 0 {
                total += 1;
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mixed;
        }
    }
    Ok(total.into())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_table_values() {
        assert_eq!(brute_force(2, 3).unwrap(), 12.into());
        assert_eq!(brute_force(3, 2).unwrap(), 8.into());
        assert_eq!(brute_force(3, 1).unwrap(), 0.into());
        assert_eq!(brute_force(2, 2).unwrap(), 0.into());
        assert_eq!(brute_force(2, 4).unwrap(), 96.into());
        assert_eq!(brute_force(3, 3).unwrap(), 84.into());
    }

    #[test]
    fn brute_force_domain() {
        assert!(brute_force(2, 0).is_err());
        assert!(brute_force(2, 6).is_err());
        assert!(brute_force(1, 3).is_err());
    }

    #[test]
    fn divisible_by_seat_count() {
        for k in 2..=5 {
            for n in 1..=4 {
                let c = brute_force(k, n).unwrap();
                assert_eq!(c % (2 * n), 0.into(), "k={k} n={n}");
            }
        }
    }

    #[test]
    fn alternating_close_counts() {
        assert_eq!(alternating_with_close(3, 0).unwrap(), 72.into());
        assert_eq!(alternating_with_close(2, 1).unwrap(), 8.into());
        assert_eq!(alternating_with_close(2, 2).unwrap(), 8.into());
    }

    #[test]
    fn pattern_values() {
        assert_eq!(pattern_oracle(2, 3, 0).unwrap(), 2.into());
        assert_eq!(pattern_oracle(2, 2, 1).unwrap(), 8.into());
        assert_eq!(pattern_oracle(2, 1, 1).unwrap(), 4.into());
        assert!(pattern_oracle(2, 7, 0).is_err());
        assert!(pattern_oracle(2, 3, 4).is_err());
    }
}
