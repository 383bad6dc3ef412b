//! Data-parallel helpers. With the `parallel` feature (default) work is
//! spread over a rayon pool; without it everything runs on the calling
//! thread. Results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::search::{Backtrack, Search};

/// Number of objects produced by `search`, sharded on the first decision.
pub fn count<S>(search: S) -> u64
where
    S: Search + Clone + Send,
{
    #[cfg(feature = "parallel")]
    {
        Backtrack::shards(search)
            .into_par_iter()
            .map(|shard| shard.count() as u64)
            .sum()
    }
    #[cfg(not(feature = "parallel"))]
    {
        count_sequential(search)
    }
}

pub fn count_sequential<S: Search>(search: S) -> u64 {
    Backtrack::new(search).count() as u64
}

/// Apply `f` to every item, in order. Stops at (and reports) the first
/// failure by index.
pub fn try_map<T, U, F>(items: &[T], f: F) -> Result<Vec<U>, String>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U, String> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}

/// Check every item; the error is the lowest-index failure.
pub fn check_all<T, F>(items: &[T], f: F) -> Result<usize, String>
where
    T: Sync,
    F: Fn(&T) -> Result<(), String> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    let first_err = items.par_iter().map(f).find_first(|r| r.is_err());
    #[cfg(not(feature = "parallel"))]
    let first_err = items.iter().map(f).find(|r| r.is_err());
    match first_err {
        Some(Err(e)) => Err(e),
        _ => Ok(items.len()),
    }
}

/// Run independent jobs, returning their results in input order.
pub fn run_jobs<J, R, F>(jobs: &[J], f: F) -> Vec<R>
where
    J: Sync,
    R: Send,
    F: Fn(&J) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        jobs.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        jobs.iter().map(f).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::SnakeSearch;

    #[test]
    fn parallel_count_matches_sequential() {
        for n in 0..=6 {
            assert_eq!(
                count(SnakeSearch::new(n)),
                count_sequential(SnakeSearch::new(n))
            );
        }
    }

    #[test]
    fn first_failure_is_reported() {
        let xs: Vec<u32> = (0..1000).collect();
        let r = check_all(&xs, |&x| {
            if x % 300 == 299 {
                Err(format!("{x}"))
            } else {
                Ok(())
            }
        });
        assert_eq!(r, Err("299".to_string()));
        assert_eq!(check_all(&xs, |_| Ok(())), Ok(1000));
        let doubled = try_map(&xs, |&x| Ok(x * 2)).unwrap();
        assert_eq!(doubled[999], 1998);
    }
}
