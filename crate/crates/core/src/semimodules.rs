//! Finite semimodules over finite semirings, their subsemimodules,
//! annihilators and modules of fractions.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Violation};
use crate::ideals::Ideal;
use crate::localization::{fraction_classes, localize, LocalizationResult};
use crate::semiring::{Element, FiniteSemiring, ONE, ZERO};
use crate::set::{ElementSet, MAX_ELEMENTS};
use crate::spectrum::McSet;

pub mod law {
    pub const ADD_ASSOCIATIVE: &str = "additive associativity";
    pub const ADD_COMMUTATIVE: &str = "additive commutativity";
    pub const ADD_IDENTITY: &str = "additive identity";
    pub const SCALAR_OVER_SUM: &str = "s·(m+n) = s·m + s·n";
    pub const SUM_OVER_SCALAR: &str = "(s+t)·m = s·m + t·m";
    pub const COMPATIBLE: &str = "(st)·m = s·(t·m)";
    pub const ZERO_VECTOR: &str = "s·0 = 0";
    pub const ZERO_SCALAR: &str = "0·m = 0";
    pub const UNIT_SCALAR: &str = "1·m = m";
}

/// Table-level description of a semimodule. `ring` names the scalar
/// semiring: a path to a semiring file or a `gallery:<name>` reference.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawSemimodule {
    pub ring: String,
    pub size: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    pub add: Vec<Vec<usize>>,
    pub zero: usize,
    pub action: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleId(u64);

/// A validated semimodule `M` over a finite semiring `S`.
#[derive(Debug, Clone)]
pub struct FiniteSemimodule {
    ring: Arc<FiniteSemiring>,
    size: usize,
    add: Vec<usize>,
    zero: usize,
    action: Vec<usize>,
    names: Vec<String>,
    id: ModuleId,
}

/// A subset of a semimodule closed under `+` and the scalar action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subsemimodule {
    parent: ModuleId,
    members: ElementSet,
}

impl Subsemimodule {
    pub fn members(&self) -> ElementSet {
        self.members
    }

    pub fn is_subset(&self, other: &Subsemimodule) -> bool {
        self.members.is_subset(other.members)
    }
}

/// Check the semimodule axioms for tables over `ring`.
pub fn validate_semimodule(
    ring: &Arc<FiniteSemiring>,
    names: Option<Vec<String>>,
    add: Vec<Vec<usize>>,
    zero: usize,
    action: Vec<Vec<usize>>,
) -> Result<FiniteSemimodule> {
    let m = add.len();
    if m == 0 || m > MAX_ELEMENTS {
        return Err(Error::MalformedTable(format!("module size {m} out of range")));
    }
    if add.iter().any(|r| r.len() != m || r.iter().any(|&x| x >= m)) {
        return Err(Error::MalformedTable("malformed module addition table".into()));
    }
    if action.len() != ring.size() || action.iter().any(|r| r.len() != m || r.iter().any(|&x| x >= m))
    {
        return Err(Error::MalformedTable("malformed action table".into()));
    }
    if zero >= m {
        return Err(Error::MalformedTable("zero index out of range".into()));
    }
    let names = match names {
        Some(n) if n.len() == m => n,
        Some(_) => return Err(Error::MalformedTable("wrong number of element names".into())),
        None => (0..m).map(|i| i.to_string()).collect(),
    };
    let module = FiniteSemimodule::new(
        Arc::clone(ring),
        names,
        add.concat(),
        zero,
        action.concat(),
    );
    let violations = module.violations();
    if violations.is_empty() {
        Ok(module)
    } else {
        Err(Error::AxiomViolation { violations })
    }
}

impl FiniteSemimodule {
    fn new(
        ring: Arc<FiniteSemiring>,
        names: Vec<String>,
        add: Vec<usize>,
        zero: usize,
        action: Vec<usize>,
    ) -> Self {
        let mut h = DefaultHasher::new();
        ring.id().hash(&mut h);
        names.len().hash(&mut h);
        add.hash(&mut h);
        zero.hash(&mut h);
        action.hash(&mut h);
        FiniteSemimodule {
            ring,
            size: names.len(),
            add,
            zero,
            action,
            names,
            id: ModuleId(h.finish()),
        }
    }

    fn violations(&self) -> Vec<Violation> {
        let mut out: Vec<Violation> = Vec::new();
        let mut record = |law: &'static str, witness: Vec<usize>| {
            if !out.iter().any(|v| v.law == law) {
                out.push(Violation { law, witness });
            }
        };
        let r = &*self.ring;
        let ms = 0..self.size;
        for a in ms.clone() {
            if self.add(self.zero, a) != a {
                record(law::ADD_IDENTITY, vec![a]);
            }
            if self.act(ZERO, a) != self.zero {
                record(law::ZERO_SCALAR, vec![a]);
            }
            if self.act(ONE, a) != a {
                record(law::UNIT_SCALAR, vec![a]);
            }
            for b in ms.clone() {
                if self.add(a, b) != self.add(b, a) {
                    record(law::ADD_COMMUTATIVE, vec![a, b]);
                }
                for c in ms.clone() {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                        record(law::ADD_ASSOCIATIVE, vec![a, b, c]);
                    }
                }
            }
        }
        for s in r.elements() {
            if self.act(s, self.zero) != self.zero {
                record(law::ZERO_VECTOR, vec![s]);
            }
            for m in ms.clone() {
                for n in ms.clone() {
                    if self.act(s, self.add(m, n)) != self.add(self.act(s, m), self.act(s, n)) {
                        record(law::SCALAR_OVER_SUM, vec![s, m, n]);
                    }
                }
                for t in r.elements() {
                    if self.act(r.add(s, t), m) != self.add(self.act(s, m), self.act(t, m)) {
                        record(law::SUM_OVER_SCALAR, vec![s, t, m]);
                    }
                    if self.act(r.mul(s, t), m) != self.act(s, self.act(t, m)) {
                        record(law::COMPATIBLE, vec![s, t, m]);
                    }
                }
            }
        }
        out
    }

    /// `S` as a module over itself.
    pub fn regular(ring: &Arc<FiniteSemiring>) -> Self {
        let n = ring.size();
        let table: Vec<usize> = (0..n * n).map(|i| ring.add(i / n, i % n)).collect();
        let action: Vec<usize> = (0..n * n).map(|i| ring.mul(i / n, i % n)).collect();
        FiniteSemimodule::new(
            Arc::clone(ring),
            ring.element_names().to_vec(),
            table,
            ZERO,
            action,
        )
    }

    /// The zero module `{0}`.
    pub fn zero_module(ring: &Arc<FiniteSemiring>) -> Self {
        FiniteSemimodule::new(
            Arc::clone(ring),
            vec!["0".into()],
            vec![0],
            0,
            vec![0; ring.size()],
        )
    }

    /// `M ⊕ N` with componentwise operations.
    pub fn direct_sum(&self, other: &FiniteSemimodule) -> Result<Self> {
        if self.ring.id() != other.ring.id() {
            return Err(Error::ParentMismatch);
        }
        let (n, m) = (self.size, other.size);
        if n * m > MAX_ELEMENTS {
            return Err(Error::SizeCapExceeded {
                size: n * m,
                cap: MAX_ELEMENTS,
            });
        }
        let idx = |a: usize, b: usize| a * m + b;
        let mut add = vec![0; n * m * n * m];
        for x in 0..n * m {
            for y in 0..n * m {
                add[x * n * m + y] = idx(
                    self.add(x / m, y / m),
                    other.add(x % m, y % m),
                );
            }
        }
        let mut action = vec![0; self.ring.size() * n * m];
        for s in self.ring.elements() {
            for x in 0..n * m {
                action[s * n * m + x] = idx(self.act(s, x / m), other.act(s, x % m));
            }
        }
        let names = (0..n * m)
            .map(|x| format!("({},{})", self.names[x / m], other.names[x % m]))
            .collect();
        Ok(FiniteSemimodule::new(
            Arc::clone(&self.ring),
            names,
            add,
            idx(self.zero, other.zero),
            action,
        ))
    }

    pub fn ring(&self) -> &Arc<FiniteSemiring> {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn id(&self) -> ModuleId {
        self.id
    }

    pub fn element_name(&self, m: usize) -> &str {
        &self.names[m]
    }

    pub fn element_by_name(&self, token: &str) -> Result<usize> {
        let token = token.trim();
        if let Some(e) = self.names.iter().position(|n| n == token) {
            return Ok(e);
        }
        match token.parse::<usize>() {
            Ok(e) if e < self.size => Ok(e),
            _ => Err(Error::UnknownElement(token.to_string())),
        }
    }

    pub fn all(&self) -> ElementSet {
        ElementSet::full(self.size)
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b]
    }

    /// Scalar action `s·m`.
    #[inline]
    pub fn act(&self, s: Element, m: usize) -> usize {
        self.action[s * self.size + m]
    }

    pub fn is_zero(&self) -> bool {
        self.size == 1
    }

    pub fn to_raw(&self, ring_ref: &str) -> RawSemimodule {
        let n = self.size;
        RawSemimodule {
            ring: ring_ref.to_string(),
            size: n,
            elements: Some(self.names.clone()),
            add: self.add.chunks(n).map(<[_]>::to_vec).collect(),
            zero: self.zero,
            action: self.action.chunks(n).map(<[_]>::to_vec).collect(),
        }
    }

    pub fn format_set(&self, set: ElementSet) -> String {
        let inner: Vec<&str> = set.iter().map(|e| self.element_name(e)).collect();
        format!("{{{}}}", inner.join(", "))
    }

    /// `Ann(x) = {s : s·x = 0}`.
    pub fn annihilator(&self, x: usize) -> Result<Ideal> {
        if x >= self.size {
            return Err(Error::UnknownElement(x.to_string()));
        }
        let members: ElementSet = self
            .ring
            .elements()
            .filter(|&s| self.act(s, x) == self.zero)
            .collect();
        self.ring.ideal(members).map_err(|_| {
            Error::PostconditionFailed(format!("Ann({}) is not an ideal", self.names[x]))
        })
    }

    fn own(&self, k: &Subsemimodule) -> Result<()> {
        if k.parent == self.id {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    pub fn is_submodule_set(&self, set: ElementSet) -> bool {
        !set.is_empty()
            && set.is_subset(self.all())
            && set.iter().all(|a| {
                set.iter().all(|b| set.contains(self.add(a, b)))
                    && self.ring.elements().all(|s| set.contains(self.act(s, a)))
            })
    }

    pub fn submodule(&self, set: ElementSet) -> Result<Subsemimodule> {
        if !self.is_submodule_set(set) {
            return Err(Error::PreconditionViolated(format!(
                "{} is not a subsemimodule",
                self.format_set(set)
            )));
        }
        Ok(self.wrap(set))
    }

    fn wrap(&self, members: ElementSet) -> Subsemimodule {
        Subsemimodule {
            parent: self.id,
            members,
        }
    }

    fn additive_closure(&self, set: ElementSet) -> ElementSet {
        let mut closed = set.with(self.zero);
        loop {
            let mut next = closed;
            for a in closed {
                for b in closed {
                    next.insert(self.add(a, b));
                }
            }
            if next == closed {
                return closed;
            }
            closed = next;
        }
    }

    /// Least subsemimodule containing `set`.
    pub fn generate_submodule(&self, set: ElementSet) -> Subsemimodule {
        let scaled: ElementSet = set
            .iter()
            .flat_map(|m| self.ring.elements().map(move |s| (s, m)))
            .map(|(s, m)| self.act(s, m))
            .collect();
        self.wrap(self.additive_closure(scaled))
    }

    pub fn whole(&self) -> Subsemimodule {
        self.wrap(self.all())
    }

    pub fn zero_submodule(&self) -> Subsemimodule {
        self.wrap(ElementSet::singleton(self.zero))
    }

    /// All subsemimodules, found as joins of cyclic ones.
    pub fn submodules(&self) -> Vec<Subsemimodule> {
        let cyclic: Vec<ElementSet> = (0..self.size)
            .map(|m| self.generate_submodule(ElementSet::singleton(m)).members)
            .collect();
        let zero = ElementSet::singleton(self.zero);
        let mut found = std::collections::BTreeSet::from([zero]);
        let mut frontier = vec![zero];
        while let Some(current) = frontier.pop() {
            for &c in &cyclic {
                let joined = self.sum_sets(current, c);
                if found.insert(joined) {
                    frontier.push(joined);
                }
            }
        }
        found.into_iter().map(|m| self.wrap(m)).collect()
    }

    fn sum_sets(&self, a: ElementSet, b: ElementSet) -> ElementSet {
        let mut out = ElementSet::EMPTY;
        for x in a {
            for y in b {
                out.insert(self.add(x, y));
            }
        }
        out
    }

    /// `K + L = {k + l}`.
    pub fn module_sum(&self, k: &Subsemimodule, l: &Subsemimodule) -> Result<Subsemimodule> {
        self.own(k)?;
        self.own(l)?;
        Ok(self.wrap(self.sum_sets(k.members, l.members)))
    }

    pub fn module_intersect(&self, k: &Subsemimodule, l: &Subsemimodule) -> Result<Subsemimodule> {
        self.own(k)?;
        self.own(l)?;
        Ok(self.wrap(k.members.intersection(l.members)))
    }

    /// `IL`: finite sums of `a·l` with `a ∈ I`, `l ∈ L`.
    pub fn ideal_action(&self, i: &Ideal, l: &Subsemimodule) -> Result<Subsemimodule> {
        self.ring.own(i)?;
        self.own(l)?;
        let mut products = ElementSet::EMPTY;
        for a in i.members() {
            for m in l.members {
                products.insert(self.act(a, m));
            }
        }
        Ok(self.wrap(self.additive_closure(products)))
    }
}

/// `M_U` as a semimodule over `S_U`, with its class map and `γ_M`.
#[derive(Debug, Clone)]
pub struct LocalizedModule {
    base: FiniteSemimodule,
    ring: LocalizationResult,
    module: FiniteSemimodule,
    class_table: Vec<usize>,
    gamma: Vec<usize>,
}

/// Construct `M_U`.
pub fn localize_module(m: &FiniteSemimodule, u: &McSet) -> Result<LocalizedModule> {
    let ring = localize(m.ring(), u)?;
    localize_module_with(m, ring)
}

/// Construct `M_U` reusing an already computed `S_U`.
pub fn localize_module_with(
    m: &FiniteSemimodule,
    ring: LocalizationResult,
) -> Result<LocalizedModule> {
    if ring.base().id() != m.ring().id() {
        return Err(Error::ParentMismatch);
    }
    let s = Arc::clone(m.ring());
    let denominators = ring.denominators().to_vec();
    let k = denominators.len();
    let classes = fraction_classes(&s, &denominators, m.size(), |t, x| m.act(t, x))?;
    let n = classes.representatives.len();
    let pos = |u: Element| denominators.binary_search(&u).expect("denominator");
    let class = |x: usize, u: Element| classes.class_of[x * k + pos(u)];

    let mut add = vec![usize::MAX; n * n];
    for p in 0..m.size() * k {
        for q in 0..m.size() * k {
            let (x, u) = (p / k, denominators[p % k]);
            let (y, v) = (q / k, denominators[q % k]);
            let value = class(m.add(m.act(v, x), m.act(u, y)), s.mul(u, v));
            let slot = &mut add[classes.class_of[p] * n + classes.class_of[q]];
            if *slot == usize::MAX {
                *slot = value;
            } else if *slot != value {
                return Err(Error::PostconditionFailed(
                    "module fraction sum depends on representatives".into(),
                ));
            }
        }
    }
    // a/u · m/v = am/uv, over every representative of both factors
    let quotient = ring.quotient();
    let mut action = vec![usize::MAX; quotient.size() * n];
    for a in s.elements() {
        for &u in &denominators {
            let scalar = ring.class_of(a, u)?;
            for p in 0..m.size() * k {
                let (x, v) = (p / k, denominators[p % k]);
                let value = class(m.act(a, x), s.mul(u, v));
                let slot = &mut action[scalar * n + classes.class_of[p]];
                if *slot == usize::MAX {
                    *slot = value;
                } else if *slot != value {
                    return Err(Error::PostconditionFailed(
                        "fraction scalar action depends on representatives".into(),
                    ));
                }
            }
        }
    }
    let names = classes
        .representatives
        .iter()
        .map(|&(x, u)| format!("{}/{}", m.element_name(x), s.element_name(u)))
        .collect();
    let module = validate_semimodule(
        quotient,
        Some(names),
        add.chunks(n).map(<[_]>::to_vec).collect(),
        class(m.zero(), ONE),
        action.chunks(n).map(<[_]>::to_vec).collect(),
    )?;
    let gamma = (0..m.size()).map(|x| class(x, ONE)).collect();
    Ok(LocalizedModule {
        base: m.clone(),
        ring,
        module,
        class_table: classes.class_of,
        gamma,
    })
}

impl LocalizedModule {
    pub fn module(&self) -> &FiniteSemimodule {
        &self.module
    }

    pub fn ring(&self) -> &LocalizationResult {
        &self.ring
    }

    /// `γ_M(m) = m/1`.
    pub fn gamma(&self, x: usize) -> usize {
        self.gamma[x]
    }

    pub fn class_of(&self, x: usize, u: Element) -> Result<usize> {
        let k = self
            .ring
            .denominators()
            .binary_search(&u)
            .map_err(|_| Error::PreconditionViolated(format!("{u} is not in the MC-set")))?;
        Ok(self.class_table[x * self.ring.denominators().len() + k])
    }

    /// `s·(m/u) = sm/u`: `M_U` viewed as an `S`-module through `γ`.
    pub fn act_base(&self, s: Element, class: usize) -> usize {
        self.module.act(self.ring.gamma().apply(s), class)
    }

    /// `K_U = {k/u : k ∈ K, u ∈ U}`.
    pub fn localize_submodule(&self, k: &Subsemimodule) -> Result<Subsemimodule> {
        self.base.own(k)?;
        let mut members = ElementSet::EMPTY;
        for x in k.members {
            for &u in self.ring.denominators() {
                members.insert(self.class_of(x, u)?);
            }
        }
        self.module.submodule(members)
    }

    /// Elements `m` with `γ_M(m) = 0` but no `t ∈ U` killing `m`; always
    /// empty for a correct construction.
    pub fn gamma_kernel_violations(&self) -> Vec<usize> {
        let zero = self.module.zero();
        (0..self.base.size())
            .filter(|&x| self.gamma[x] == zero)
            .filter(|&x| {
                !self
                    .ring
                    .denominators()
                    .iter()
                    .any(|&t| self.base.act(t, x) == self.base.zero())
            })
            .collect()
    }
}

/// Outcome of the local-global zero test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalZeroReport {
    pub module_is_zero: bool,
    pub zero_at_all_primes: bool,
    pub zero_at_all_maximals: bool,
    /// For a nonzero module: an element `x`, a maximal ideal containing
    /// `Ann(x)` and the fact that `x/1 ≠ 0` there.
    pub witness: Option<(usize, Ideal)>,
}

impl LocalZeroReport {
    pub fn agreed(&self) -> Option<bool> {
        (self.module_is_zero == self.zero_at_all_primes
            && self.zero_at_all_primes == self.zero_at_all_maximals)
            .then_some(self.module_is_zero)
    }
}

/// Compute `M = 0`, `M_P = 0 ∀P ∈ Spec(S)` and `M_m = 0 ∀m ∈ Max(S)`
/// independently and check that they agree.
pub fn is_zero_locally(m: &FiniteSemimodule) -> Result<LocalZeroReport> {
    let ring = m.ring();
    let spectrum = ring.spectrum();
    let zero_at = |p: &Ideal| -> Result<bool> {
        let w = ring.prime_complement(p)?;
        Ok(localize_module(m, &w)?.module().is_zero())
    };
    let module_is_zero = m.is_zero();
    let mut zero_at_all_primes = true;
    for p in spectrum.primes() {
        zero_at_all_primes &= zero_at(p)?;
    }
    let mut zero_at_all_maximals = true;
    for mx in spectrum.maximals() {
        zero_at_all_maximals &= zero_at(mx)?;
    }
    let mut witness = None;
    if !module_is_zero {
        'search: for x in (0..m.size()).filter(|&x| x != m.zero()) {
            let ann = m.annihilator(x)?;
            for mx in spectrum.maximals() {
                if ann.is_subset(mx) {
                    let loc = localize_module(m, &ring.prime_complement(mx)?)?;
                    if loc.gamma(x) != loc.module().zero() {
                        witness = Some((x, *mx));
                        break 'search;
                    }
                }
            }
        }
    }
    let report = LocalZeroReport {
        module_is_zero,
        zero_at_all_primes,
        zero_at_all_maximals,
        witness,
    };
    if report.agreed().is_none() || (!module_is_zero && report.witness.is_none()) {
        return Err(Error::EquivalenceFailure(format!("{report:?}")));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gallery;

    #[test]
    fn regular_modules_validate() {
        for s in gallery::gallery() {
            let s = Arc::new(s);
            let m = FiniteSemimodule::regular(&s);
            assert!(m.violations().is_empty(), "{}", s.name());
            assert!(FiniteSemimodule::zero_module(&s).violations().is_empty());
        }
    }

    #[test]
    fn broken_unit_law_is_rejected() {
        let b = Arc::new(gallery::boolean());
        let err = validate_semimodule(
            &b,
            None,
            vec![vec![0, 1], vec![1, 1]],
            0,
            vec![vec![0, 0], vec![0, 0]],
        );
        match err {
            Err(Error::AxiomViolation { violations }) => {
                assert!(violations.iter().any(|v| v.law == law::UNIT_SCALAR));
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn annihilators() {
        let b = Arc::new(gallery::boolean());
        let m = FiniteSemimodule::regular(&b);
        assert_eq!(m.annihilator(0).unwrap(), b.unit_ideal());
        assert_eq!(m.annihilator(1).unwrap(), b.zero_ideal());

        let bb = Arc::new(gallery::by_name("BxB").unwrap());
        let m = FiniteSemimodule::regular(&bb);
        let e = |n: &str| bb.element_by_name(n).unwrap();
        let zero_b = bb
            .ideal([e("(0,0)"), e("(0,1)")].into_iter().collect())
            .unwrap();
        assert_eq!(m.annihilator(e("(1,0)")).unwrap(), zero_b);
    }

    #[test]
    fn submodule_arithmetic() {
        let bb = Arc::new(gallery::by_name("BxB").unwrap());
        let m = FiniteSemimodule::regular(&bb);
        let e = |n: &str| bb.element_by_name(n).unwrap();
        let zero_b = bb
            .ideal([e("(0,0)"), e("(0,1)")].into_iter().collect())
            .unwrap();
        let b_zero = m
            .submodule([e("(0,0)"), e("(1,0)")].into_iter().collect())
            .unwrap();
        assert_eq!(
            m.ideal_action(&zero_b, &b_zero).unwrap(),
            m.zero_submodule()
        );
        assert_eq!(
            m.module_sum(&b_zero, &m.zero_submodule()).unwrap(),
            b_zero
        );
        assert_eq!(
            m.ideal_action(&bb.unit_ideal(), &b_zero).unwrap(),
            b_zero
        );
        assert_eq!(m.submodules().len(), 4);
    }

    #[test]
    fn localizing_l3_at_s() {
        let l3 = Arc::new(gallery::chain(3));
        let s = l3.element_by_name("s").unwrap();
        let m = FiniteSemimodule::regular(&l3);
        let w = l3.mc_set([s, 1].into_iter().collect()).unwrap();
        let loc = localize_module(&m, &w).unwrap();
        assert_eq!(loc.module().size(), 2);
        assert_eq!(loc.module().ring().size(), 2);
        assert!(loc.gamma_kernel_violations().is_empty());

        let unit = l3.mc_set(ElementSet::singleton(1)).unwrap();
        assert_eq!(localize_module(&m, &unit).unwrap().module().size(), 3);

        let z = FiniteSemimodule::zero_module(&l3);
        assert!(localize_module(&z, &w).unwrap().module().is_zero());
    }

    #[test]
    fn local_global_zero() {
        let b = Arc::new(gallery::boolean());
        let report = is_zero_locally(&FiniteSemimodule::zero_module(&b)).unwrap();
        assert_eq!(report.agreed(), Some(true));
        let report = is_zero_locally(&FiniteSemimodule::regular(&b)).unwrap();
        assert_eq!(report.agreed(), Some(false));
        assert_eq!(report.witness.map(|w| w.0), Some(1));

        let l3 = Arc::new(gallery::chain(3));
        let report = is_zero_locally(&FiniteSemimodule::regular(&l3)).unwrap();
        assert_eq!(report.agreed(), Some(false));
    }
}
