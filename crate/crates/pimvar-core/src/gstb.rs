//! Global synchronized-to-buffer translations: a pair of send/receive
//! action sequences over one content MVar (`putS`/`takeS`) and `n`
//! unit-typed check MVars (`putC^i`/`takeC^i`), together with validation
//! and symmetry-reduced enumeration of three search regimes.

use crate::pi::Name;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// One uninstantiated action of a send- or receive-sequence.
///
/// The derived order (`PutS < TakeS < PutC(i) < TakeC(i)`, indices ascending)
/// is the order used for canonical representatives.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Action {
    PutS,
    TakeS,
    PutC(u8),
    TakeC(u8),
}

impl Action {
    pub fn check_index(self) -> Option<u8> {
        match self {
            Action::PutC(i) | Action::TakeC(i) => Some(i),
            _ => None,
        }
    }

    fn rename(self, perm: &[u8]) -> Action {
        match self {
            Action::PutC(i) => Action::PutC(perm[(i - 1) as usize]),
            Action::TakeC(i) => Action::TakeC(perm[(i - 1) as usize]),
            a => a,
        }
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Action::PutS => write!(f, "putS"),
            Action::TakeS => write!(f, "takeS"),
            Action::PutC(i) => write!(f, "putC{}", i),
            Action::TakeC(i) => write!(f, "takeC{}", i),
        }
    }
}

/// A gstb-translation: the send-sequence contains `putS` exactly once and no
/// `takeS`; the receive-sequence contains `takeS` exactly once and no `putS`;
/// every `putC^i` is matched by a `takeC^i` somewhere in the pair.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct GstbTranslation {
    pub send: Vec<Action>,
    pub receive: Vec<Action>,
    pub n_checks: u8,
}

impl GstbTranslation {
    pub fn new(send: Vec<Action>, receive: Vec<Action>) -> Self {
        let n_checks = send
            .iter()
            .chain(&receive)
            .filter_map(|a| a.check_index())
            .max()
            .unwrap_or(0);
        GstbTranslation {
            send,
            receive,
            n_checks,
        }
    }

    /// Structural invariants from the definition of gstb-translations,
    /// independent of any search regime.
    pub fn well_formed(&self) -> bool {
        let sends_put = self.send.iter().filter(|a| **a == Action::PutS).count() == 1;
        let send_no_take = !self.send.contains(&Action::TakeS);
        let recv_take = self.receive.iter().filter(|a| **a == Action::TakeS).count() == 1;
        let recv_no_put = !self.receive.contains(&Action::PutS);
        if !(sends_put && send_no_take && recv_take && recv_no_put) {
            return false;
        }
        let all = || self.send.iter().chain(&self.receive);
        // Index range, full use of 1..=n_checks, and putC matched by takeC.
        for i in 1..=self.n_checks {
            if !all().any(|a| a.check_index() == Some(i)) {
                return false;
            }
        }
        if all().any(|a| a.check_index().map_or(false, |i| i == 0 || i > self.n_checks)) {
            return false;
        }
        for i in 1..=self.n_checks {
            let has_put = all().any(|a| *a == Action::PutC(i));
            let has_take = all().any(|a| *a == Action::TakeC(i));
            if has_put && !has_take {
                return false;
            }
        }
        self.send_indices_ascending()
    }

    /// First occurrences of check indices in the send-sequence ascend.
    fn send_indices_ascending(&self) -> bool {
        let mut seen: Vec<u8> = Vec::new();
        for a in &self.send {
            if let Some(i) = a.check_index() {
                if !seen.contains(&i) {
                    if seen.last().map_or(false, |last| *last > i) {
                        return false;
                    }
                    seen.push(i);
                }
            }
        }
        true
    }

    /// The least pair under all permutations of check-MVar indices. Two
    /// translations are index-renamings of each other iff their canonical
    /// forms are equal.
    pub fn canonical(&self) -> GstbTranslation {
        let n = self.n_checks as usize;
        if n <= 1 {
            return self.clone();
        }
        let mut best: Option<(Vec<Action>, Vec<Action>)> = None;
        let mut perm: Vec<u8> = (1..=self.n_checks).collect();
        for_each_permutation(&mut perm, &mut |p| {
            let cand = (
                self.send.iter().map(|a| a.rename(p)).collect::<Vec<_>>(),
                self.receive.iter().map(|a| a.rename(p)).collect::<Vec<_>>(),
            );
            if best.as_ref().map_or(true, |b| cand < *b) {
                best = Some(cand);
            }
        });
        let (send, receive) = best.unwrap();
        GstbTranslation {
            send,
            receive,
            n_checks: self.n_checks,
        }
    }

    /// Same translation up to renaming of check-MVar indices.
    pub fn iso_eq(&self, other: &GstbTranslation) -> bool {
        self.n_checks == other.n_checks && self.canonical() == other.canonical()
    }
}

impl fmt::Display for GstbTranslation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq = |f: &mut fmt::Formatter<'_>, s: &[Action]| -> fmt::Result {
            write!(f, "[")?;
            for (k, a) in s.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", a)?;
            }
            write!(f, "]")
        };
        write!(f, "(")?;
        seq(f, &self.send)?;
        write!(f, ",")?;
        seq(f, &self.receive)?;
        write!(f, ")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("bad translation notation: {0}")]
pub struct NotationError(String);

impl FromStr for GstbTranslation {
    type Err = NotationError;

    /// Parses the `([takeC1,putS],[putC1,takeS])` notation. An index-free
    /// `putC`/`takeC` means index 1.
    fn from_str(s: &str) -> Result<Self, NotationError> {
        fn parse_seq(s: &str) -> Result<Vec<Action>, NotationError> {
            let inner = s
                .strip_prefix('[')
                .and_then(|t| t.strip_suffix(']'))
                .ok_or_else(|| NotationError(format!("expected [..] in {s:?}")))?;
            let mut out = Vec::new();
            if inner.trim().is_empty() {
                return Ok(out);
            }
            for tok in inner.split(',') {
                let tok = tok.trim();
                let act = if tok == "putS" {
                    Action::PutS
                } else if tok == "takeS" {
                    Action::TakeS
                } else if let Some(rest) = tok.strip_prefix("putC") {
                    Action::PutC(parse_idx(rest)?)
                } else if let Some(rest) = tok.strip_prefix("takeC") {
                    Action::TakeC(parse_idx(rest)?)
                } else {
                    return Err(NotationError(format!("unknown action {tok:?}")));
                };
                out.push(act);
            }
            Ok(out)
        }
        fn parse_idx(s: &str) -> Result<u8, NotationError> {
            if s.is_empty() {
                Ok(1)
            } else {
                s.parse()
                    .map_err(|_| NotationError(format!("bad check index {s:?}")))
            }
        }

        let body = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| NotationError(format!("expected (..) in {s:?}")))?;
        let mid = body
            .find("],")
            .ok_or_else(|| NotationError("expected two sequences".into()))?;
        let send = parse_seq(body[..mid + 1].trim())?;
        let receive = parse_seq(body[mid + 2..].trim())?;
        Ok(GstbTranslation::new(send, receive))
    }
}

impl Serialize for GstbTranslation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GstbTranslation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// Which space of translations to search.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub enum SearchRegime {
    /// `n` check MVars, each used exactly once, with `putC^i` and `takeC^i`
    /// never in the same sequence.
    Interprocess(u8),
    /// `n` check MVars, each `putC^i`/`takeC^i` exactly once overall, free
    /// placement; quotiented by index renaming.
    FreeSingleUse(u8),
    /// One check MVar, `putC` and `takeC` each occurring exactly `u` times,
    /// free placement.
    SingleMVarMultiUse(u8),
}

impl fmt::Display for SearchRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchRegime::Interprocess(n) => write!(f, "interprocess:{}", n),
            SearchRegime::FreeSingleUse(n) => write!(f, "free:{}", n),
            SearchRegime::SingleMVarMultiUse(u) => write!(f, "multiuse:{}", u),
        }
    }
}

impl FromStr for SearchRegime {
    type Err = NotationError;

    fn from_str(s: &str) -> Result<Self, NotationError> {
        let (kind, num) = s
            .split_once(':')
            .ok_or_else(|| NotationError(format!("expected kind:n, got {s:?}")))?;
        let n: u8 = num
            .parse()
            .map_err(|_| NotationError(format!("bad count {num:?}")))?;
        match kind {
            "interprocess" => Ok(SearchRegime::Interprocess(n)),
            "free" => Ok(SearchRegime::FreeSingleUse(n)),
            "multiuse" => Ok(SearchRegime::SingleMVarMultiUse(n)),
            _ => Err(NotationError(format!("unknown regime {kind:?}"))),
        }
    }
}

/// Checks the structural invariants plus the regime's constraints.
pub fn validate(t: &GstbTranslation, r: SearchRegime) -> bool {
    if !t.well_formed() {
        return false;
    }
    let count = |seq: &[Action], a: Action| seq.iter().filter(|x| **x == a).count();
    match r {
        SearchRegime::Interprocess(n) => {
            if t.n_checks != n {
                return false;
            }
            for i in 1..=n {
                let (put, take) = (Action::PutC(i), Action::TakeC(i));
                let total_put = count(&t.send, put) + count(&t.receive, put);
                let total_take = count(&t.send, take) + count(&t.receive, take);
                if total_put != 1 || total_take != 1 {
                    return false;
                }
                // Not co-located in one sequence.
                if (count(&t.send, put) == 1) == (count(&t.send, take) == 1) {
                    return false;
                }
            }
            true
        }
        SearchRegime::FreeSingleUse(n) => {
            if t.n_checks != n {
                return false;
            }
            (1..=n).all(|i| {
                count(&t.send, Action::PutC(i)) + count(&t.receive, Action::PutC(i)) == 1
                    && count(&t.send, Action::TakeC(i)) + count(&t.receive, Action::TakeC(i)) == 1
            })
        }
        SearchRegime::SingleMVarMultiUse(uses) => {
            if t.n_checks != 1 {
                return false;
            }
            let puts = count(&t.send, Action::PutC(1)) + count(&t.receive, Action::PutC(1));
            let takes = count(&t.send, Action::TakeC(1)) + count(&t.receive, Action::TakeC(1));
            puts == takes && puts == uses as usize
        }
    }
}

/// Heap's algorithm; calls `f` on every permutation of `items`.
fn for_each_permutation<T: Clone>(items: &mut [T], f: &mut impl FnMut(&[T])) {
    fn go<T: Clone>(k: usize, items: &mut [T], f: &mut impl FnMut(&[T])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k {
            go(k - 1, items, f);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let k = items.len();
    go(k, items, f);
}

/// All distinct sequences over a multiset of actions, lexicographically.
fn for_each_multiset_sequence(counts: &mut Vec<(Action, usize)>, f: &mut impl FnMut(&[Action])) {
    fn go(
        counts: &mut Vec<(Action, usize)>,
        remaining: usize,
        prefix: &mut Vec<Action>,
        f: &mut impl FnMut(&[Action]),
    ) {
        if remaining == 0 {
            f(prefix);
            return;
        }
        for k in 0..counts.len() {
            if counts[k].1 == 0 {
                continue;
            }
            counts[k].1 -= 1;
            prefix.push(counts[k].0);
            go(counts, remaining - 1, prefix, f);
            prefix.pop();
            counts[k].1 += 1;
        }
    }
    let total: usize = counts.iter().map(|c| c.1).sum();
    go(counts, total, &mut Vec::with_capacity(total), f);
}

/// Enumerates all valid translations of a regime, one canonical
/// representative per index-renaming class, in a deterministic order.
pub fn enumerate(r: SearchRegime) -> Vec<GstbTranslation> {
    let mut out = Vec::new();
    match r {
        SearchRegime::Interprocess(n) => enumerate_interprocess(n, &mut out),
        SearchRegime::FreeSingleUse(n) => enumerate_free_single_use(n, &mut out),
        SearchRegime::SingleMVarMultiUse(uses) => enumerate_multi_use(uses, &mut out),
    }
    debug_assert!(out.iter().all(|t| validate(t, r)));
    out
}

fn enumerate_interprocess(n: u8, out: &mut Vec<GstbTranslation>) {
    // For each check MVar choose the side of its putC; the send checks are
    // fixed ascending, the receive checks permute freely, and putS/takeS can
    // sit at any of n+1 positions. Iteration order puts putC-in-send first
    // and later slots first, which for n = 1 yields the classic 8-row order.
    let n_us = n as usize;
    for mask in (0..(1u32 << n)).rev() {
        let send_checks: Vec<Action> = (1..=n)
            .map(|i| {
                if mask & (1 << (i - 1)) != 0 {
                    Action::PutC(i)
                } else {
                    Action::TakeC(i)
                }
            })
            .collect();
        let recv_checks: Vec<Action> = (1..=n)
            .map(|i| {
                if mask & (1 << (i - 1)) != 0 {
                    Action::TakeC(i)
                } else {
                    Action::PutC(i)
                }
            })
            .collect();
        for put_pos in (0..=n_us).rev() {
            let mut send = send_checks.clone();
            send.insert(put_pos, Action::PutS);
            let mut perm_sorted = recv_checks.clone();
            perm_sorted.sort();
            let mut recv_orders: Vec<Vec<Action>> = Vec::new();
            for_each_permutation(&mut perm_sorted, &mut |p| recv_orders.push(p.to_vec()));
            recv_orders.sort();
            recv_orders.dedup();
            for recv_order in recv_orders {
                for take_pos in (0..=n_us).rev() {
                    let mut receive = recv_order.clone();
                    receive.insert(take_pos, Action::TakeS);
                    out.push(GstbTranslation {
                        send: send.clone(),
                        receive,
                        n_checks: n,
                    });
                }
            }
        }
    }
}

fn enumerate_free_single_use(n: u8, out: &mut Vec<GstbTranslation>) {
    // Place each of the 2n distinct check actions on either side in any
    // order; keep a candidate iff it is its own canonical form, so each
    // renaming class appears exactly once.
    let actions: Vec<Action> = (1..=n)
        .flat_map(|i| [Action::PutC(i), Action::TakeC(i)])
        .collect();
    let m = actions.len();
    for mask in 0..(1u32 << m) {
        let mut send_items = vec![Action::PutS];
        let mut recv_items = vec![Action::TakeS];
        for (k, a) in actions.iter().enumerate() {
            if mask & (1 << k) != 0 {
                send_items.push(*a);
            } else {
                recv_items.push(*a);
            }
        }
        let mut sends: Vec<Vec<Action>> = Vec::new();
        for_each_permutation(&mut send_items, &mut |p| sends.push(p.to_vec()));
        sends.sort();
        let mut recvs: Vec<Vec<Action>> = Vec::new();
        for_each_permutation(&mut recv_items, &mut |p| recvs.push(p.to_vec()));
        recvs.sort();
        for send in &sends {
            for receive in &recvs {
                let t = GstbTranslation {
                    send: send.clone(),
                    receive: receive.clone(),
                    n_checks: n,
                };
                if t.canonical() == t {
                    out.push(t);
                }
            }
        }
    }
    out.sort();
}

fn enumerate_multi_use(uses: u8, out: &mut Vec<GstbTranslation>) {
    let u = uses as usize;
    for send_puts in 0..=u {
        for send_takes in 0..=u {
            let mut send_counts = vec![
                (Action::PutS, 1),
                (Action::PutC(1), send_puts),
                (Action::TakeC(1), send_takes),
            ];
            let mut recv_counts = vec![
                (Action::TakeS, 1),
                (Action::PutC(1), u - send_puts),
                (Action::TakeC(1), u - send_takes),
            ];
            let mut sends: Vec<Vec<Action>> = Vec::new();
            for_each_multiset_sequence(&mut send_counts, &mut |s| sends.push(s.to_vec()));
            let mut recvs: Vec<Vec<Action>> = Vec::new();
            for_each_multiset_sequence(&mut recv_counts, &mut |s| recvs.push(s.to_vec()));
            for send in &sends {
                for receive in &recvs {
                    out.push(GstbTranslation {
                        send: send.clone(),
                        receive: receive.clone(),
                        n_checks: 1,
                    });
                }
            }
        }
    }
}

/// An action instantiated for a concrete channel, as used by the abstract
/// simulator and the induced translations.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ChanAction {
    PutS { chan: Name, msg: Name },
    TakeS { chan: Name, binder: Name },
    PutC { chan: Name, idx: u8 },
    TakeC { chan: Name, idx: u8 },
}

/// Instantiates the send-sequence for an output of `y` on `x` and the
/// receive-sequence for an input on `x` binding `y`: `putS` becomes
/// `putS_x y`, `takeS` becomes `takeS_x y`, and every check action is
/// indexed with `x`.
pub fn instantiate(
    t: &GstbTranslation,
    x: &Name,
    y: &Name,
) -> (Vec<ChanAction>, Vec<ChanAction>) {
    let inst = |a: &Action, receiving: bool| match a {
        Action::PutS => ChanAction::PutS {
            chan: x.clone(),
            msg: y.clone(),
        },
        Action::TakeS => {
            debug_assert!(receiving);
            ChanAction::TakeS {
                chan: x.clone(),
                binder: y.clone(),
            }
        }
        Action::PutC(i) => ChanAction::PutC {
            chan: x.clone(),
            idx: *i,
        },
        Action::TakeC(i) => ChanAction::TakeC {
            chan: x.clone(),
            idx: *i,
        },
    };
    (
        t.send.iter().map(|a| inst(a, false)).collect(),
        t.receive.iter().map(|a| inst(a, true)).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    pub fn t(s: &str) -> GstbTranslation {
        s.parse().unwrap()
    }

    #[test]
    fn notation_roundtrip() {
        for s in [
            "([takeC1,putS],[putC1,takeS])",
            "([putS],[takeS])",
            "([putC1,putS,takeC2,takeC1],[takeS,putC2])",
        ] {
            let tr = t(s);
            assert_eq!(tr.to_string(), s);
            assert_eq!(t(&tr.to_string()), tr);
        }
        // Index-free notation means index 1.
        assert_eq!(t("([putC,putS],[takeC,takeS])"), t("([putC1,putS],[takeC1,takeS])"));
    }

    #[test]
    fn validate_examples() {
        let t1 = t("([putS,putC1,takeC2,putC3],[takeC1,putC2,takeC3,takeS])");
        assert!(validate(&t1, SearchRegime::Interprocess(3)));
        assert!(!validate(
            &t("([putC1,takeC1,putS],[takeS])"),
            SearchRegime::Interprocess(1)
        ));
        let t7 = t("([putC1,putS,takeC2,takeC1],[takeS,putC2])");
        assert!(validate(&t7, SearchRegime::FreeSingleUse(2)));
    }

    #[test]
    fn interprocess_counts() {
        assert_eq!(enumerate(SearchRegime::Interprocess(1)).len(), 8);
        assert_eq!(enumerate(SearchRegime::Interprocess(2)).len(), 72);
        assert_eq!(enumerate(SearchRegime::Interprocess(3)).len(), 768);
    }

    #[test]
    fn interprocess_one_is_the_classic_list() {
        let names: Vec<String> = enumerate(SearchRegime::Interprocess(1))
            .iter()
            .map(|t| t.to_string())
            .collect();
        assert_eq!(
            names,
            vec![
                "([putC1,putS],[takeC1,takeS])",
                "([putC1,putS],[takeS,takeC1])",
                "([putS,putC1],[takeC1,takeS])",
                "([putS,putC1],[takeS,takeC1])",
                "([takeC1,putS],[putC1,takeS])",
                "([takeC1,putS],[takeS,putC1])",
                "([putS,takeC1],[putC1,takeS])",
                "([putS,takeC1],[takeS,putC1])",
            ]
        );
    }

    #[test]
    fn free_single_use_small_count() {
        assert_eq!(enumerate(SearchRegime::FreeSingleUse(1)).len(), 20);
    }

    #[test]
    fn enumerated_translations_are_valid_and_distinct() {
        for r in [
            SearchRegime::Interprocess(2),
            SearchRegime::FreeSingleUse(2),
            SearchRegime::SingleMVarMultiUse(2),
        ] {
            let all = enumerate(r);
            let mut canon: Vec<GstbTranslation> = all.iter().map(|t| t.canonical()).collect();
            canon.sort();
            let before = canon.len();
            canon.dedup();
            assert_eq!(before, canon.len(), "renaming-isomorphic duplicates in {r}");
            assert!(all.iter().all(|t| validate(t, r)));
        }
    }

    /// Independent oracle: place actions without any normalization, then
    /// quotient by index renaming via canonicalization, and count classes.
    #[test]
    fn free_single_use_count_matches_brute_force_quotient() {
        use std::collections::BTreeSet;
        for n in [1u8, 2] {
            let actions: Vec<Action> = (1..=n)
                .flat_map(|i| [Action::PutC(i), Action::TakeC(i)])
                .collect();
            let m = actions.len();
            let mut classes: BTreeSet<(Vec<Action>, Vec<Action>)> = BTreeSet::new();
            for mask in 0..(1u32 << m) {
                let mut send_items = vec![Action::PutS];
                let mut recv_items = vec![Action::TakeS];
                for (k, a) in actions.iter().enumerate() {
                    if mask & (1 << k) != 0 {
                        send_items.push(*a);
                    } else {
                        recv_items.push(*a);
                    }
                }
                let mut sends = Vec::new();
                for_each_permutation(&mut send_items, &mut |p| sends.push(p.to_vec()));
                let mut recvs = Vec::new();
                for_each_permutation(&mut recv_items, &mut |p| recvs.push(p.to_vec()));
                for s in &sends {
                    for r in &recvs {
                        let c = GstbTranslation {
                            send: s.clone(),
                            receive: r.clone(),
                            n_checks: n,
                        }
                        .canonical();
                        classes.insert((c.send, c.receive));
                    }
                }
            }
            let expected = enumerate(SearchRegime::FreeSingleUse(n)).len();
            assert_eq!(classes.len(), expected, "n={n}");
        }
    }

    #[test]
    fn multi_use_small_counts() {
        // u = 1 coincides with free placement of one putC and one takeC.
        assert_eq!(enumerate(SearchRegime::SingleMVarMultiUse(1)).len(), 20);
        assert_eq!(enumerate(SearchRegime::SingleMVarMultiUse(2)).len(), 210);
    }

    /// Independent oracle for the multi-use count: distribute `u` copies of
    /// putC and takeC over both sides in all distinct orders and count.
    #[test]
    fn multi_use_count_matches_brute_force() {
        fn multinomial(parts: &[usize]) -> usize {
            let total: usize = parts.iter().sum();
            let mut num = 1usize;
            for k in 2..=total {
                num *= k;
            }
            let mut den = 1usize;
            for p in parts {
                for k in 2..=*p {
                    den *= k;
                }
            }
            num / den
        }
        for u in 1..=4usize {
            let mut total = 0usize;
            for i in 0..=u {
                for j in 0..=u {
                    total += multinomial(&[1, i, j]) * multinomial(&[1, u - i, u - j]);
                }
            }
            let got = enumerate(SearchRegime::SingleMVarMultiUse(u as u8)).len();
            assert_eq!(got, total, "u={u}");
        }
    }

    #[test]
    fn instantiate_example() {
        let t8 = t("([takeC1,putS],[putC2,putC1,takeS,takeC2])");
        let x = Name::new("x");
        let y = Name::new("y");
        let (send, receive) = instantiate(&t8, &x, &y);
        assert_eq!(
            send,
            vec![
                ChanAction::TakeC { chan: x.clone(), idx: 1 },
                ChanAction::PutS { chan: x.clone(), msg: y.clone() },
            ]
        );
        assert_eq!(
            receive,
            vec![
                ChanAction::PutC { chan: x.clone(), idx: 2 },
                ChanAction::PutC { chan: x.clone(), idx: 1 },
                ChanAction::TakeS { chan: x.clone(), binder: y.clone() },
                ChanAction::TakeC { chan: x.clone(), idx: 2 },
            ]
        );
    }

    #[test]
    fn instantiate_no_checks_is_identity_embedding() {
        let t0 = t("([putS],[takeS])");
        let (send, receive) = instantiate(&t0, &Name::new("x"), &Name::new("z"));
        assert_eq!(send.len(), 1);
        assert_eq!(receive.len(), 1);
    }

    #[test]
    fn canonical_picks_least_relabeling() {
        let a = t("([putS,putC2,takeC1],[takeC2,putC1,takeS])");
        let b = t("([putS,putC1,takeC2],[takeC1,putC2,takeS])");
        assert!(a.iso_eq(&b));
        assert_eq!(a.canonical(), b);
    }
}
