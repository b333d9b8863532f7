//! Exact may/should-convergence for flat soups by exhaustive exploration.
//!
//! Each interaction step removes two prefixes, so the reachable state graph
//! is a finite DAG and both observations are decidable. Successful soups are
//! frozen: every successor of a successful soup is itself successful (the
//! `stop` thread is never consumed), so exploring past success cannot change
//! either observation.

use super::soup::{is_successful, step_pi, Soup};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};

/// A (may, should) convergence pair. `should` implies `may`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Verdict {
    pub may: bool,
    pub should: bool,
}

impl Verdict {
    pub fn yn(self) -> String {
        fn b(v: bool) -> char {
            if v {
                'Y'
            } else {
                'N'
            }
        }
        format!("{}{}", b(self.may), b(self.should))
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn b(v: bool) -> char {
            if v {
                'Y'
            } else {
                'N'
            }
        }
        write!(f, "may={} should={}", b(self.may), b(self.should))
    }
}

fn may_converges(s: &Soup, memo: &mut HashMap<Soup, bool>) -> bool {
    if let Some(&v) = memo.get(s) {
        return v;
    }
    let result = if is_successful(s) {
        true
    } else {
        step_pi(s).iter().any(|succ| may_converges(succ, memo))
    };
    memo.insert(s.clone(), result);
    result
}

/// Decides may- and should-convergence of a flat soup.
pub fn verdict_pi(s: &Soup) -> Verdict {
    let mut memo = HashMap::new();
    let may = may_converges(s, &mut memo);
    if !may {
        return Verdict {
            may: false,
            should: false,
        };
    }
    // should-convergence: every reachable soup may-converges.
    let mut seen: HashSet<Soup> = HashSet::new();
    let mut stack = vec![s.clone()];
    seen.insert(s.clone());
    while let Some(st) = stack.pop() {
        if !may_converges(&st, &mut memo) {
            return Verdict {
                may: true,
                should: false,
            };
        }
        if is_successful(&st) {
            continue;
        }
        for succ in step_pi(&st) {
            if seen.insert(succ.clone()) {
                stack.push(succ);
            }
        }
    }
    Verdict {
        may: true,
        should: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pi::parse::parse_pi;
    use crate::pi::soup::normalize;

    fn verdict(src: &str) -> Verdict {
        verdict_pi(&normalize(&parse_pi(src).unwrap()).unwrap())
    }

    #[test]
    fn convergent_example() {
        // P: the only reduction ends in 0 | stop.
        let v = verdict("new x,y.(x(z).0 | x<y>.stop)");
        assert_eq!(
            v,
            Verdict {
                may: true,
                should: true
            }
        );
    }

    #[test]
    fn divergent_example() {
        let v = verdict("new x,y.(x(z).0 | x<y>.0)");
        assert_eq!(
            v,
            Verdict {
                may: false,
                should: false
            }
        );
    }

    #[test]
    fn mixed_example() {
        // One race winner leads to stop, the other deadlocks it.
        let v = verdict("new x,y.(x<y>.0 | x(z).stop | x(u).0)");
        assert_eq!(
            v,
            Verdict {
                may: true,
                should: false
            }
        );
    }

    #[test]
    fn should_implies_may() {
        for src in [
            "0",
            "stop",
            "new x.(x<x>.0 | x(y).y<x>.stop)",
            "new x,y.(x<y>.stop | x(z).0 | x(u).stop)",
        ] {
            let v = verdict(src);
            assert!(!v.should || v.may);
        }
    }
}
