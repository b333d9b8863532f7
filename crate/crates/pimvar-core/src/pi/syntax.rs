//! Process syntax for the synchronous pi-calculus with a success constant.

use std::fmt;
use std::sync::Arc;

/// A channel name. Cheap to clone; ordered and hashable so soups can be
/// kept in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Name(Arc<str>);

impl Name {
    pub fn new(s: impl AsRef<str>) -> Self {
        Name(Arc::from(s.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Name {
    fn from(s: &str) -> Self {
        Name::new(s)
    }
}

/// A pi-calculus process term.
///
/// `Out` sends a name over a channel, `In` receives one (binding `binder`
/// in the continuation), `Nu` restricts a name, `Repl` is replication,
/// `Stop` signals success.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Process {
    Nil,
    Stop,
    Nu(Name, Box<Process>),
    Out {
        chan: Name,
        msg: Name,
        cont: Box<Process>,
    },
    In {
        chan: Name,
        binder: Name,
        cont: Box<Process>,
    },
    Repl(Box<Process>),
    Par(Box<Process>, Box<Process>),
}

impl Process {
    pub fn nu(name: impl Into<Name>, body: Process) -> Process {
        Process::Nu(name.into(), Box::new(body))
    }

    pub fn out(chan: impl Into<Name>, msg: impl Into<Name>, cont: Process) -> Process {
        Process::Out {
            chan: chan.into(),
            msg: msg.into(),
            cont: Box::new(cont),
        }
    }

    pub fn input(chan: impl Into<Name>, binder: impl Into<Name>, cont: Process) -> Process {
        Process::In {
            chan: chan.into(),
            binder: binder.into(),
            cont: Box::new(cont),
        }
    }

    pub fn par(left: Process, right: Process) -> Process {
        Process::Par(Box::new(left), Box::new(right))
    }

    pub fn repl(body: Process) -> Process {
        Process::Repl(Box::new(body))
    }

    /// Wraps `self` in `Nu` binders for every free name, innermost-first in
    /// the order given by `free_names`.
    pub fn nu_closed(self) -> Process {
        let mut p = self;
        let free: Vec<Name> = p.free_names().into_iter().collect();
        for name in free.into_iter().rev() {
            p = Process::Nu(name, Box::new(p));
        }
        p
    }

    /// Free names, in first-occurrence order.
    pub fn free_names(&self) -> Vec<Name> {
        fn go(p: &Process, bound: &mut Vec<Name>, acc: &mut Vec<Name>) {
            match p {
                Process::Nil | Process::Stop => {}
                Process::Nu(x, body) => {
                    bound.push(x.clone());
                    go(body, bound, acc);
                    bound.pop();
                }
                Process::Out { chan, msg, cont } => {
                    for n in [chan, msg] {
                        if !bound.contains(n) && !acc.contains(n) {
                            acc.push(n.clone());
                        }
                    }
                    go(cont, bound, acc);
                }
                Process::In { chan, binder, cont } => {
                    if !bound.contains(chan) && !acc.contains(chan) {
                        acc.push(chan.clone());
                    }
                    bound.push(binder.clone());
                    go(cont, bound, acc);
                    bound.pop();
                }
                Process::Repl(body) => go(body, bound, acc),
                Process::Par(l, r) => {
                    go(l, bound, acc);
                    go(r, bound, acc);
                }
            }
        }
        let mut acc = Vec::new();
        go(self, &mut Vec::new(), &mut acc);
        acc
    }

    /// Renames binders so that all binders are pairwise distinct and
    /// distinct from every free name (the distinct-variable convention).
    /// Renaming appends primes, which stay within the name grammar.
    pub fn freshen(&self) -> Process {
        use std::collections::HashMap;
        use std::collections::HashSet;

        fn fresh(base: &Name, used: &HashSet<Name>) -> Name {
            let mut cand = format!("{}'", base);
            while used.contains(&Name::new(&cand)) {
                cand.push('\'');
            }
            Name::new(cand)
        }

        fn go(
            p: &Process,
            env: &HashMap<Name, Name>,
            used: &mut HashSet<Name>,
        ) -> Process {
            let resolve = |n: &Name, env: &HashMap<Name, Name>| -> Name {
                env.get(n).cloned().unwrap_or_else(|| n.clone())
            };
            match p {
                Process::Nil => Process::Nil,
                Process::Stop => Process::Stop,
                Process::Nu(x, body) => {
                    let x2 = if used.contains(x) { fresh(x, used) } else { x.clone() };
                    used.insert(x2.clone());
                    let mut env2 = env.clone();
                    env2.insert(x.clone(), x2.clone());
                    Process::Nu(x2, Box::new(go(body, &env2, used)))
                }
                Process::Out { chan, msg, cont } => Process::Out {
                    chan: resolve(chan, env),
                    msg: resolve(msg, env),
                    cont: Box::new(go(cont, env, used)),
                },
                Process::In { chan, binder, cont } => {
                    let chan2 = resolve(chan, env);
                    let b2 = if used.contains(binder) {
                        fresh(binder, used)
                    } else {
                        binder.clone()
                    };
                    used.insert(b2.clone());
                    let mut env2 = env.clone();
                    env2.insert(binder.clone(), b2.clone());
                    Process::In {
                        chan: chan2,
                        binder: b2,
                        cont: Box::new(go(cont, &env2, used)),
                    }
                }
                Process::Repl(body) => Process::Repl(Box::new(go(body, env, used))),
                Process::Par(l, r) => {
                    let l2 = go(l, env, used);
                    let r2 = go(r, env, used);
                    Process::Par(Box::new(l2), Box::new(r2))
                }
            }
        }

        let mut used: HashSet<Name> = self.free_names().into_iter().collect();
        go(self, &HashMap::new(), &mut used)
    }

    /// True when `self` and `other` are equal up to a consistent renaming of
    /// bound names.
    pub fn alpha_eq(&self, other: &Process) -> bool {
        // The map holds binder pairs, innermost last; a name pair matches if
        // their innermost bindings line up, or neither is bound and they are
        // literally equal.
        fn names_match(n1: &Name, n2: &Name, map: &[(Name, Name)]) -> bool {
            let left = map.iter().rev().position(|(l, _)| l == n1);
            let right = map.iter().rev().position(|(_, r)| r == n2);
            match (left, right) {
                (Some(i), Some(j)) => i == j,
                (None, None) => n1 == n2,
                _ => false,
            }
        }
        fn go(a: &Process, b: &Process, map: &mut Vec<(Name, Name)>) -> bool {
            match (a, b) {
                (Process::Nil, Process::Nil) | (Process::Stop, Process::Stop) => true,
                (Process::Nu(x, p), Process::Nu(y, q)) => {
                    map.push((x.clone(), y.clone()));
                    let r = go(p, q, map);
                    map.pop();
                    r
                }
                (
                    Process::Out { chan: c1, msg: m1, cont: p },
                    Process::Out { chan: c2, msg: m2, cont: q },
                ) => names_match(c1, c2, map) && names_match(m1, m2, map) && go(p, q, map),
                (
                    Process::In { chan: c1, binder: b1, cont: p },
                    Process::In { chan: c2, binder: b2, cont: q },
                ) => {
                    if !names_match(c1, c2, map) {
                        return false;
                    }
                    map.push((b1.clone(), b2.clone()));
                    let r = go(p, q, map);
                    map.pop();
                    r
                }
                (Process::Repl(p), Process::Repl(q)) => go(p, q, map),
                (Process::Par(l1, r1), Process::Par(l2, r2)) => {
                    go(l1, l2, map) && go(r1, r2, map)
                }
                _ => false,
            }
        }
        go(self, other, &mut Vec::new())
    }
}

/// Deterministic printer. Continuations are always explicit (`x<y>.0`, never
/// `x<y>`), consecutive restrictions are merged (`new x,y.P`), and only the
/// right spine of parallel compositions is flattened, so reparsing the output
/// yields the same tree up to alpha.
pub fn print_pi(p: &Process) -> String {
    fn go(p: &Process, out: &mut String) {
        match p {
            Process::Nil => out.push('0'),
            Process::Stop => out.push_str("stop"),
            Process::Nu(x, body) => {
                out.push_str("new ");
                out.push_str(x.as_str());
                let mut cur = body.as_ref();
                while let Process::Nu(y, inner) = cur {
                    out.push(',');
                    out.push_str(y.as_str());
                    cur = inner;
                }
                out.push('.');
                go(cur, out);
            }
            Process::Out { chan, msg, cont } => {
                out.push_str(chan.as_str());
                out.push('<');
                out.push_str(msg.as_str());
                out.push_str(">.");
                go(cont, out);
            }
            Process::In { chan, binder, cont } => {
                out.push_str(chan.as_str());
                out.push('(');
                out.push_str(binder.as_str());
                out.push_str(").");
                go(cont, out);
            }
            Process::Repl(body) => {
                out.push('!');
                go(body, out);
            }
            Process::Par(l, r) => {
                out.push('(');
                go(l, out);
                let mut cur = r.as_ref();
                while let Process::Par(l2, r2) = cur {
                    out.push_str(" | ");
                    go(l2, out);
                    cur = r2;
                }
                out.push_str(" | ");
                go(cur, out);
                out.push(')');
            }
        }
    }
    let mut s = String::new();
    go(p, &mut s);
    s
}

impl fmt::Display for Process {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_pi(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn print_basics() {
        assert_eq!(print_pi(&Process::Nil), "0");
        assert_eq!(print_pi(&Process::Stop), "stop");
        assert_eq!(
            print_pi(&Process::par(Process::Nil, Process::Stop)),
            "(0 | stop)"
        );
    }

    #[test]
    fn print_merges_consecutive_restrictions() {
        let p = Process::nu("x", Process::nu("y", Process::Nil));
        assert_eq!(print_pi(&p), "new x,y.0");
    }

    #[test]
    fn freshen_renames_colliding_binder() {
        // x(x).0 | x<y>.0 : the binder x collides with the free channel x.
        let p = Process::par(
            Process::input("x", "x", Process::Nil),
            Process::out("x", "y", Process::Nil),
        );
        let q = p.freshen();
        match &q {
            Process::Par(l, _) => match l.as_ref() {
                Process::In { chan, binder, .. } => {
                    assert_eq!(chan.as_str(), "x");
                    assert_ne!(binder.as_str(), "x");
                }
                _ => panic!("shape changed"),
            },
            _ => panic!("shape changed"),
        }
        assert!(p.alpha_eq(&q));
    }

    #[test]
    fn alpha_eq_binders() {
        let p = Process::input("x", "y", Process::out("y", "y", Process::Nil));
        let q = Process::input("x", "z", Process::out("z", "z", Process::Nil));
        assert!(p.alpha_eq(&q));
        let r = Process::input("x", "z", Process::out("z", "x", Process::Nil));
        assert!(!p.alpha_eq(&r));
    }
}
