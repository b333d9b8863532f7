//! Canonical flat form for the replication-free fragment: top-level
//! restrictions plus a multiset of sequential threads.
//!
//! The congruence laws (unit, associativity, commutativity, scope extrusion)
//! all act on the top-level parallel/restriction structure in this fragment,
//! so a sorted thread list is a sound and complete normal form. Processes
//! outside the fragment are rejected, not mishandled.

use super::syntax::{Name, Process};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Prefix {
    In { chan: Name, binder: Name },
    Out { chan: Name, msg: Name },
}

impl Prefix {
    pub fn chan(&self) -> &Name {
        match self {
            Prefix::In { chan, .. } | Prefix::Out { chan, .. } => chan,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Tail {
    Nil,
    Stop,
}

/// One maximal prefix-sequential thread.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SeqThread {
    pub prefixes: Vec<Prefix>,
    pub tail: Tail,
}

impl SeqThread {
    pub fn is_nil(&self) -> bool {
        self.prefixes.is_empty() && self.tail == Tail::Nil
    }

    /// Substitutes `new` for free occurrences of `old`. Binder positions are
    /// binding occurrences and are left alone; the distinct-variable
    /// convention rules out shadowing.
    fn substitute(&mut self, old: &Name, new: &Name) {
        for p in &mut self.prefixes {
            match p {
                Prefix::In { chan, .. } => {
                    if chan == old {
                        *chan = new.clone();
                    }
                }
                Prefix::Out { chan, msg } => {
                    if chan == old {
                        *chan = new.clone();
                    }
                    if msg == old {
                        *msg = new.clone();
                    }
                }
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Soup {
    pub restricted: BTreeSet<Name>,
    /// Sorted; a multiset represented with duplicates kept.
    pub threads: Vec<SeqThread>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FragmentError {
    #[error("replication is outside the flat fragment")]
    Replication,
    #[error("restriction under a prefix is outside the flat fragment")]
    NuUnderPrefix,
    #[error("parallel composition under a prefix is outside the flat fragment")]
    ParUnderPrefix,
}

impl Soup {
    pub fn total_prefixes(&self) -> usize {
        self.threads.iter().map(|t| t.prefixes.len()).sum()
    }

    fn push_sorted(&mut self, t: SeqThread) {
        if !t.is_nil() {
            self.threads.push(t);
        }
    }

    fn canonicalize(&mut self) {
        self.threads.sort();
    }

    /// Rebuilds a process term: restrictions over the sorted parallel threads.
    pub fn to_process(&self) -> Process {
        let mut parts: Vec<Process> = self.threads.iter().map(thread_to_process).collect();
        let mut body = match parts.len() {
            0 => Process::Nil,
            1 => parts.pop().unwrap(),
            _ => {
                let mut p = parts.pop().unwrap();
                while let Some(q) = parts.pop() {
                    p = Process::par(q, p);
                }
                p
            }
        };
        for n in self.restricted.iter().rev() {
            body = Process::Nu(n.clone(), Box::new(body));
        }
        body
    }
}

fn thread_to_process(t: &SeqThread) -> Process {
    let mut p = match t.tail {
        Tail::Nil => Process::Nil,
        Tail::Stop => Process::Stop,
    };
    for pre in t.prefixes.iter().rev() {
        p = match pre {
            Prefix::In { chan, binder } => Process::In {
                chan: chan.clone(),
                binder: binder.clone(),
                cont: Box::new(p),
            },
            Prefix::Out { chan, msg } => Process::Out {
                chan: chan.clone(),
                msg: msg.clone(),
                cont: Box::new(p),
            },
        };
    }
    p
}

impl fmt::Display for Soup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_process())
    }
}

/// Normalizes a flat-fragment process to its soup. Restrictions are hoisted
/// through parallel composition; nil threads are dropped; threads are sorted.
pub fn normalize(p: &Process) -> Result<Soup, FragmentError> {
    fn thread(p: &Process, prefixes: &mut Vec<Prefix>) -> Result<Tail, FragmentError> {
        match p {
            Process::Nil => Ok(Tail::Nil),
            Process::Stop => Ok(Tail::Stop),
            Process::In { chan, binder, cont } => {
                prefixes.push(Prefix::In {
                    chan: chan.clone(),
                    binder: binder.clone(),
                });
                thread(cont, prefixes)
            }
            Process::Out { chan, msg, cont } => {
                prefixes.push(Prefix::Out {
                    chan: chan.clone(),
                    msg: msg.clone(),
                });
                thread(cont, prefixes)
            }
            Process::Nu(..) => Err(FragmentError::NuUnderPrefix),
            Process::Par(..) => Err(FragmentError::ParUnderPrefix),
            Process::Repl(..) => Err(FragmentError::Replication),
        }
    }

    fn go(p: &Process, soup: &mut Soup) -> Result<(), FragmentError> {
        match p {
            Process::Nil => Ok(()),
            Process::Nu(x, body) => {
                soup.restricted.insert(x.clone());
                go(body, soup)
            }
            Process::Par(l, r) => {
                go(l, soup)?;
                go(r, soup)
            }
            Process::Repl(..) => Err(FragmentError::Replication),
            _ => {
                let mut prefixes = Vec::new();
                let tail = thread(p, &mut prefixes)?;
                soup.push_sorted(SeqThread { prefixes, tail });
                Ok(())
            }
        }
    }

    let mut soup = Soup {
        restricted: BTreeSet::new(),
        threads: Vec::new(),
    };
    go(p, &mut soup)?;
    soup.canonicalize();
    Ok(soup)
}

/// A soup is successful when the success constant sits at the top level,
/// i.e. some thread has no prefixes and a `stop` tail.
pub fn is_successful(s: &Soup) -> bool {
    s.threads
        .iter()
        .any(|t| t.prefixes.is_empty() && t.tail == Tail::Stop)
}

/// All one-step interaction successors: one per unordered pair of a thread
/// whose head receives on `x` and a thread whose head sends on `x`. The
/// received name is substituted through the receiver's remainder, and the
/// result is re-canonicalized. Duplicate successors are merged.
pub fn step_pi(s: &Soup) -> Vec<Soup> {
    let mut out: BTreeSet<Soup> = BTreeSet::new();
    for (i, recv) in s.threads.iter().enumerate() {
        let Some(Prefix::In { chan, binder }) = recv.prefixes.first() else {
            continue;
        };
        for (j, send) in s.threads.iter().enumerate() {
            if i == j {
                continue;
            }
            let Some(Prefix::Out { chan: c2, msg }) = send.prefixes.first() else {
                continue;
            };
            if chan != c2 {
                continue;
            }
            let mut next = Soup {
                restricted: s.restricted.clone(),
                threads: Vec::with_capacity(s.threads.len()),
            };
            for (k, t) in s.threads.iter().enumerate() {
                if k == i {
                    let mut t2 = SeqThread {
                        prefixes: t.prefixes[1..].to_vec(),
                        tail: t.tail,
                    };
                    t2.substitute(binder, msg);
                    next.push_sorted(t2);
                } else if k == j {
                    next.push_sorted(SeqThread {
                        prefixes: t.prefixes[1..].to_vec(),
                        tail: t.tail,
                    });
                } else {
                    next.push_sorted(t.clone());
                }
            }
            next.canonicalize();
            out.insert(next);
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pi::parse::parse_pi;

    fn soup(src: &str) -> Soup {
        normalize(&parse_pi(src).unwrap()).unwrap()
    }

    #[test]
    fn normalize_example() {
        let s = soup("new x,y.(x(z).0 | x<y>.stop)");
        let names: Vec<&str> = s.restricted.iter().map(|n| n.as_str()).collect();
        assert_eq!(names, vec!["x", "y"]);
        assert_eq!(s.threads.len(), 2);
        assert_eq!(s.total_prefixes(), 2);
    }

    #[test]
    fn normalize_drops_nil_threads() {
        let s = soup("(0 | 0)");
        assert!(s.threads.is_empty());
        assert!(s.restricted.is_empty());
    }

    #[test]
    fn normalize_rejects_replication() {
        let p = parse_pi("!0").unwrap();
        assert_eq!(normalize(&p), Err(FragmentError::Replication));
    }

    #[test]
    fn normalize_rejects_nu_under_prefix() {
        let p = parse_pi("x(y).new z.0").unwrap();
        assert_eq!(normalize(&p), Err(FragmentError::NuUnderPrefix));
    }

    #[test]
    fn normalize_hoists_inner_restriction() {
        let s = soup("(x<y>.0 | new z.z(u).0)");
        assert_eq!(s.restricted.len(), 1);
        assert_eq!(s.threads.len(), 2);
    }

    #[test]
    fn successful_cases() {
        assert!(is_successful(&soup("stop")));
        assert!(!is_successful(&soup("x(y).stop")));
        assert!(is_successful(&soup("(0 | stop)")));
    }

    #[test]
    fn step_substitutes_received_name() {
        // x(z).z<u>.0 | x<y>.y(w).0  -->  y<u>.0 | y(w).0
        let s = soup("(x(z).z<u>.0 | x<y>.y(w).0)");
        let succ = step_pi(&s);
        assert_eq!(succ.len(), 1);
        let expected = soup("(y<u>.0 | y(w).0)");
        // Compare thread structure; the restricted sets differ (original
        // keeps x although it no longer occurs).
        assert_eq!(succ[0].threads, expected.threads);
    }

    #[test]
    fn step_on_successful_soup_with_no_redex() {
        assert!(step_pi(&soup("stop")).is_empty());
    }

    #[test]
    fn step_branches_per_receiver() {
        // x<y>.0 | x(z).stop | x(z).0 has two distinct successors.
        let s = soup("(x<y>.0 | x(z).stop | x(u).0)");
        let succ = step_pi(&s);
        assert_eq!(succ.len(), 2);
        let successes: Vec<bool> = succ.iter().map(is_successful).collect();
        assert!(successes.contains(&true) && successes.contains(&false));
    }

    #[test]
    fn step_decreases_prefix_count_by_two() {
        let s = soup("(x(z).z<u>.0 | x<y>.y(w).0)");
        for succ in step_pi(&s) {
            assert_eq!(succ.total_prefixes() + 2, s.total_prefixes());
        }
    }
}
