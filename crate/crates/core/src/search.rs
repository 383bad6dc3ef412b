//! A small depth-first backtracking engine that turns a [`Search`] into a
//! lazy iterator. Candidates at each level are tried in index order, so a
//! search that lists its candidates in text order yields objects in text
//! order.

/// A backtracking problem with a fixed number of decisions.
pub trait Search {
    type Item;

    /// Number of decisions that make a complete object.
    fn depth(&self) -> usize;

    /// Number of candidate indices at `level`, given levels `0..level` applied.
    fn choices(&self, level: usize) -> usize;

    /// Apply candidate `choice` at `level` if it keeps the partial object
    /// extendable; return whether it was applied.
    fn push(&mut self, level: usize, choice: usize) -> bool;

    /// Undo the candidate applied at `level`.
    fn pop(&mut self, level: usize);

    /// Build the object for the current complete assignment.
    fn emit(&self) -> Self::Item;
}

pub struct Backtrack<S> {
    search: S,
    stack: Vec<usize>,
    pending: usize,
    base: usize,
    done: bool,
}

impl<S: Search> Backtrack<S> {
    pub fn new(search: S) -> Self {
        Backtrack {
            search,
            stack: Vec::new(),
            pending: 0,
            base: 0,
            done: false,
        }
    }

    /// Only the objects whose first decision is `first`.
    pub fn with_first(search: S, first: usize) -> Self {
        Backtrack::with_prefix(search, &[first])
    }

    /// Only the objects whose leading decisions are `prefix`.
    pub fn with_prefix(mut search: S, prefix: &[usize]) -> Self {
        let mut applied = Vec::with_capacity(prefix.len());
        for (level, &c) in prefix.iter().enumerate() {
            if level >= search.depth() || c >= search.choices(level) || !search.push(level, c) {
                break;
            }
            applied.push(c);
        }
        let ok = applied.len() == prefix.len();
        if !ok {
            for level in (0..applied.len()).rev() {
                search.pop(level);
            }
            applied.clear();
        }
        Backtrack {
            search,
            stack: applied,
            pending: 0,
            base: prefix.len(),
            done: !ok,
        }
    }

    fn backtrack(&mut self) {
        let c = self.stack.pop().expect("stack above base");
        self.search.pop(self.stack.len());
        self.pending = c + 1;
    }
}

impl<S: Search + Clone> Backtrack<S> {
    /// Split the search into independent pieces, one per first decision.
    pub fn shards(search: S) -> Vec<Backtrack<S>> {
        if search.depth() == 0 {
            return vec![Backtrack::new(search)];
        }
        (0..search.choices(0))
            .map(|c| Backtrack::with_first(search.clone(), c))
            .collect()
    }
}

impl<S: Search> Iterator for Backtrack<S> {
    type Item = S::Item;

    fn next(&mut self) -> Option<S::Item> {
        while !self.done {
            let level = self.stack.len();
            if level == self.search.depth() {
                let item = self.search.emit();
                if level == self.base {
                    self.done = true;
                } else {
                    self.backtrack();
                }
                return Some(item);
            }
            if self.pending < self.search.choices(level) {
                let c = self.pending;
                if self.search.push(level, c) {
                    self.stack.push(c);
                    self.pending = 0;
                } else {
                    self.pending += 1;
                }
            } else if level == self.base {
                self.done = true;
            } else {
                self.backtrack();
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // Binary words of length n without two adjacent ones.
    #[derive(Clone)]
    struct NoAdjacentOnes {
        n: usize,
        word: Vec<u8>,
    }

    impl Search for NoAdjacentOnes {
        type Item = String;
        fn depth(&self) -> usize {
            self.n
        }
        fn choices(&self, _: usize) -> usize {
            2
        }
        fn push(&mut self, _: usize, c: usize) -> bool {
            if c == 1 && self.word.last() == Some(&1) {
                return false;
            }
            self.word.push(c as u8);
            true
        }
        fn pop(&mut self, _: usize) {
            self.word.pop();
        }
        fn emit(&self) -> String {
            self.word.iter().map(|b| char::from(b'0' + b)).collect()
        }
    }

    fn words(n: usize) -> Vec<String> {
        Backtrack::new(NoAdjacentOnes { n, word: vec![] }).collect()
    }

    #[test]
    fn fibonacci_counts_in_order() {
        let counts: Vec<usize> = (0..8).map(|n| words(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 8, 13, 21, 34]);
        assert_eq!(words(3), vec!["000", "001", "010", "100", "101"]);
    }

    #[test]
    fn prefix_restricts() {
        let s = NoAdjacentOnes { n: 4, word: vec![] };
        let got: Vec<String> = Backtrack::with_prefix(s.clone(), &[1, 0]).collect();
        assert_eq!(got, vec!["1000", "1001", "1010"]);
        assert_eq!(Backtrack::with_prefix(s.clone(), &[1, 1]).count(), 0);
        assert_eq!(Backtrack::with_prefix(s, &[]).count(), 8);
    }

    #[test]
    fn shards_partition_the_stream() {
        for n in 0..7 {
            let s = NoAdjacentOnes { n, word: vec![] };
            let joined: Vec<String> = Backtrack::shards(s).into_iter().flatten().collect();
            assert_eq!(joined, words(n));
        }
    }
}
