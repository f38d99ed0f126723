//! The theorem-consistency harness: evaluates both sides of each
//! structural statement elementwise on a reproducible corpus. Every
//! statement checked here is proved, so a `Counterexample` outcome flags an
//! implementation bug, never new mathematics; bounded evidence that cannot
//! decide a side yields `Inconclusive`.

use std::fmt;

use crate::error::{Error, Result};
use crate::semidomain::{Element, UStatus, Witness};

use super::probes::LengthFn;
use super::Lab;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TheoremId {
    /// Localizations of semisubtractive semidomains are semisubtractive.
    LocalizationSemisubtractive,
    /// Units are the ambient units lying inside the semidomain.
    UnitsMeet,
    /// An atom that is not an ambient atom has a reducible negation.
    AtomNegation,
    /// Furstenberg transfers between the semidomain and its ambient.
    FurstenbergIff,
    /// Additively invertible elements factor together with their negatives.
    InvertibleFactorizations,
    /// ACCP transfers to the ambient.
    AccpIff,
    /// Bounded factorization transfers via the squared length function.
    BoundedFactorizationIff,
    /// Finite factorization transfers (divisor-class growth).
    FiniteFactorizationIff,
    /// Primes descend from the ambient under trivial additive invertibles.
    PrimesAscendDescend,
    /// Unique factorization iff ambient UFD with trivial or full
    /// invertibles.
    UniqueFactorizationIff,
    /// Half-factorial iff ambient HFD and atoms match the ambient atoms.
    HalfFactorialIff,
}

impl TheoremId {
    pub fn parse(s: &str) -> Result<TheoremId> {
        match s {
            "T2.5" => Ok(TheoremId::LocalizationSemisubtractive),
            "T3.1" => Ok(TheoremId::UnitsMeet),
            "T3.3" | "T3.3.2" => Ok(TheoremId::AtomNegation),
            "T3.4" => Ok(TheoremId::FurstenbergIff),
            "T4.2" => Ok(TheoremId::InvertibleFactorizations),
            "T4.5.1" | "T4.5-accp" => Ok(TheoremId::AccpIff),
            "T4.5.2" | "T4.5-bf" => Ok(TheoremId::BoundedFactorizationIff),
            "T4.5.3" | "T4.5-ff" => Ok(TheoremId::FiniteFactorizationIff),
            "T5.1" => Ok(TheoremId::PrimesAscendDescend),
            "T5.2" => Ok(TheoremId::UniqueFactorizationIff),
            "T5.4" => Ok(TheoremId::HalfFactorialIff),
            other => Err(Error::UnknownTheoremId(other.to_string())),
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            TheoremId::LocalizationSemisubtractive => "T2.5",
            TheoremId::UnitsMeet => "T3.1",
            TheoremId::AtomNegation => "T3.3",
            TheoremId::FurstenbergIff => "T3.4",
            TheoremId::InvertibleFactorizations => "T4.2",
            TheoremId::AccpIff => "T4.5.1",
            TheoremId::BoundedFactorizationIff => "T4.5.2",
            TheoremId::FiniteFactorizationIff => "T4.5.3",
            TheoremId::PrimesAscendDescend => "T5.1",
            TheoremId::UniqueFactorizationIff => "T5.2",
            TheoremId::HalfFactorialIff => "T5.4",
        }
    }

    pub fn all() -> [TheoremId; 11] {
        [
            TheoremId::LocalizationSemisubtractive,
            TheoremId::UnitsMeet,
            TheoremId::AtomNegation,
            TheoremId::FurstenbergIff,
            TheoremId::InvertibleFactorizations,
            TheoremId::AccpIff,
            TheoremId::BoundedFactorizationIff,
            TheoremId::FiniteFactorizationIff,
            TheoremId::PrimesAscendDescend,
            TheoremId::UniqueFactorizationIff,
            TheoremId::HalfFactorialIff,
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Overall {
    Consistent,
    Counterexample(Witness),
    Inconclusive,
}

impl fmt::Display for Overall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Overall::Consistent => write!(f, "consistent"),
            Overall::Counterexample(w) => write!(f, "counterexample: {}", w),
            Overall::Inconclusive => write!(f, "inconclusive"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsistencyReport {
    pub theorem: String,
    pub instance: String,
    pub corpus: String,
    pub checked: usize,
    /// Human-readable findings per side or per notable element.
    pub notes: Vec<String>,
    /// Short outcome tag such as "UFS" / "not UFS" / "not HFS".
    pub outcome: String,
    pub overall: Overall,
}

impl<'a> Lab<'a> {
    pub fn verify_theorem(&self, id: TheoremId) -> Result<ConsistencyReport> {
        let corpus_desc = format!(
            "members(deg<={}, h<={}, n<={})",
            self.bounds().max_degree,
            self.bounds().max_height,
            self.bounds().max_candidates
        );
        let mut report = ConsistencyReport {
            theorem: id.code().to_string(),
            instance: self.instance().id().to_string(),
            corpus: corpus_desc,
            checked: 0,
            notes: Vec::new(),
            outcome: String::new(),
            overall: Overall::Consistent,
        };
        match id {
            TheoremId::LocalizationSemisubtractive => self.check_localization(&mut report)?,
            TheoremId::UnitsMeet => self.check_units(&mut report)?,
            TheoremId::AtomNegation => self.check_atom_negation(&mut report)?,
            TheoremId::FurstenbergIff => self.check_furstenberg(&mut report)?,
            TheoremId::InvertibleFactorizations => self.check_invertible_factors(&mut report)?,
            TheoremId::AccpIff => self.check_accp(&mut report)?,
            TheoremId::BoundedFactorizationIff => self.check_bf(&mut report)?,
            TheoremId::FiniteFactorizationIff => self.check_ff(&mut report)?,
            TheoremId::PrimesAscendDescend => self.check_primes(&mut report)?,
            TheoremId::UniqueFactorizationIff => self.check_uf(&mut report)?,
            TheoremId::HalfFactorialIff => self.check_hf(&mut report)?,
        }
        Ok(report)
    }

    fn nonunit_members(&self, cap: usize) -> Result<Vec<Element>> {
        let mut out = Vec::new();
        for s in self.instance().enumerate_members(self.bounds())? {
            if s.is_zero() {
                continue;
            }
            if self.instance().is_unit(&s)?.is_proved() {
                continue;
            }
            out.push(s);
            if out.len() >= cap {
                break;
            }
        }
        Ok(out)
    }

    /// Elements where factorization-uniqueness and length phenomena
    /// surface: the leading corpus nonunits plus pairwise products of the
    /// first corpus atoms (the square of an atom with reducible negation,
    /// or a product of distinct atoms, is where non-unique and multi-length
    /// factorizations first appear).
    fn witness_probes(&self, cap: usize) -> Result<Vec<Element>> {
        let base = self.nonunit_members(cap)?;
        let mut atoms: Vec<Element> = Vec::new();
        let mut plain = 0usize;
        for s in &base {
            match self.is_atom(s) {
                Ok(v) if v.is_proved() => {
                    // atoms that are reducible in the ambient are exactly
                    // where non-unique and multi-length products appear, so
                    // they are always kept
                    if self.ambient_irreducible(s)? == Some(false) {
                        atoms.push(s.clone());
                    } else if plain < 8 {
                        plain += 1;
                        atoms.push(s.clone());
                    }
                }
                Ok(_) => {}
                Err(Error::UnsupportedElement) => {}
                Err(e) => return Err(e),
            }
        }
        let mut probes = base;
        for (i, a) in atoms.iter().enumerate() {
            for b in atoms.iter().skip(i) {
                let prod = self.instance().mul(a, b)?;
                if !probes.contains(&prod) {
                    probes.push(prod);
                }
            }
        }
        Ok(probes)
    }

    fn check_localization(&self, report: &mut ConsistencyReport) -> Result<()> {
        if !self.instance().uses_fractions() {
            report.overall = Overall::Inconclusive;
            report.notes.push("not a localized instance".into());
            return Ok(());
        }
        for g in self.instance().enumerate_ambient(self.bounds())? {
            report.checked += 1;
            if !self.instance().semisubtractive_check(&g)? {
                report.overall = Overall::Counterexample(Witness::Element(g));
                return Ok(());
            }
        }
        report
            .notes
            .push("every ambient fraction or its negative is a member".into());
        Ok(())
    }

    fn check_units(&self, report: &mut ConsistencyReport) -> Result<()> {
        let mut units_found = Vec::new();
        for s in self.instance().enumerate_members(self.bounds())? {
            if s.is_zero() {
                continue;
            }
            report.checked += 1;
            let by_lemma = self.instance().is_unit(&s)?.is_proved();
            let direct = self.direct_unit_check(&s)?;
            if by_lemma != direct {
                report.overall = Overall::Counterexample(Witness::Element(s));
                return Ok(());
            }
            if by_lemma {
                units_found.push(s.to_string());
            }
        }
        report
            .notes
            .push(format!("unit set on corpus: {{{}}}", units_found.join(", ")));
        Ok(())
    }

    /// Independent unit decision: exhibit an inverse inside the semidomain.
    /// In polynomial ambients only constants can invert (trailing and
    /// leading exponents add), so the search is decisive.
    fn direct_unit_check(&self, s: &Element) -> Result<bool> {
        match s {
            Element::Poly(p) => {
                if !p.is_constant() {
                    return Ok(false);
                }
                let inv = match p.constant_term().inverse() {
                    Some(i) => i,
                    None => return Ok(false),
                };
                let cand = Element::Poly(crate::poly::Poly::constant(inv, p.dim()));
                Ok(self.instance().ambient_contains(&cand)?
                    && self.instance().contains(&cand)?)
            }
            Element::Frac(f) => {
                if f.num.is_zero() {
                    return Ok(false);
                }
                let cand = Element::Frac(crate::semidomain::Fraction::new(
                    f.den.clone(),
                    f.num.clone(),
                )?);
                if !self.instance().ambient_contains(&cand)? || !self.instance().contains(&cand)? {
                    return Ok(false);
                }
                let prod = self.instance().mul(s, &cand)?;
                self.instance().eq_elements(&prod, &self.instance().one())
            }
        }
    }

    fn check_atom_negation(&self, report: &mut ConsistencyReport) -> Result<()> {
        let mut applicable = 0usize;
        for s in self.nonunit_members(self.bounds().max_candidates as usize)? {
            let atom = match self.is_atom(&s) {
                Ok(v) => v.is_proved(),
                Err(Error::UnsupportedElement) => continue,
                Err(e) => return Err(e),
            };
            if !atom {
                continue;
            }
            report.checked += 1;
            match self.ambient_irreducible(&s)? {
                Some(false) => {
                    applicable += 1;
                    let neg = s.neg();
                    let member = self.instance().contains(&neg)?;
                    let nonunit = member && !self.instance().is_unit(&neg)?.is_proved();
                    let reducible = member && nonunit && self.is_atom(&neg)?.is_refuted();
                    if !(member && nonunit && reducible) {
                        report.overall = Overall::Counterexample(Witness::Element(s));
                        return Ok(());
                    }
                    report
                        .notes
                        .push(format!("{}: negation is a reducible nonunit member", s));
                }
                Some(true) | None => continue,
            }
        }
        if applicable == 0 {
            report.overall = Overall::Inconclusive;
            report
                .notes
                .push("no corpus atom fails ambient irreducibility".into());
        }
        Ok(())
    }

    fn check_furstenberg(&self, report: &mut ConsistencyReport) -> Result<()> {
        // semidomain side
        for s in self.nonunit_members(40)? {
            report.checked += 1;
            match self.furstenberg_witness(&s) {
                Ok(v) if v.is_proved() => {}
                Ok(_) => {
                    report.overall = Overall::Inconclusive;
                    report
                        .notes
                        .push(format!("no atom divisor found for {} at bounds", s));
                    return Ok(());
                }
                Err(Error::UnsupportedElement) => continue,
                Err(e) => return Err(e),
            }
        }
        // ambient side
        let amb = self.instance().ambient_view();
        let amb_lab = Lab::new(&amb, self.bounds().clone());
        for s in amb_lab.nonunit_members(40)? {
            report.checked += 1;
            match amb_lab.furstenberg_witness(&s) {
                Ok(v) if v.is_proved() => {}
                Ok(_) => {
                    report.overall = Overall::Inconclusive;
                    report
                        .notes
                        .push(format!("no ambient atom divisor found for {} at bounds", s));
                    return Ok(());
                }
                Err(Error::UnsupportedElement) => continue,
                Err(e) => return Err(e),
            }
        }
        report
            .notes
            .push("atom divisors found on both sides of the corpus".into());
        Ok(())
    }

    fn check_invertible_factors(&self, report: &mut ConsistencyReport) -> Result<()> {
        let mut applicable = 0usize;
        for s in self.nonunit_members(self.bounds().max_candidates as usize)? {
            if !self.instance().is_additive_invertible(&s)? {
                continue;
            }
            let (zs, complete) = match self.factorizations(&s) {
                Ok(x) => x,
                Err(Error::UnsupportedElement) => continue,
                Err(e) => return Err(e),
            };
            if !complete || zs.is_empty() {
                continue;
            }
            report.checked += 1;
            applicable += 1;
            let neg = s.neg();
            if self.instance().is_unit(&neg)?.is_proved() {
                continue;
            }
            let (neg_zs, neg_complete) = self.factorizations(&neg)?;
            if neg_zs.is_empty() && neg_complete {
                report.overall = Overall::Counterexample(Witness::Element(s));
                return Ok(());
            }
            if neg_zs.is_empty() {
                report.overall = Overall::Inconclusive;
                report
                    .notes
                    .push(format!("negation of {} not factored at bounds", s));
                return Ok(());
            }
        }
        if applicable == 0 {
            report.overall = Overall::Inconclusive;
            report
                .notes
                .push("no factored invertible elements in corpus".into());
        } else {
            report.notes.push(format!(
                "{} invertible elements factor together with their negatives",
                applicable
            ));
        }
        Ok(())
    }

    /// A bounded ACCP picture per side: descent evidence (a halving chain
    /// exhausting the budget) or stability of every probe.
    fn accp_side(&self, lab: &Lab<'_>) -> Result<(bool, usize)> {
        let mut descent = false;
        let mut probes = 0usize;
        for s in lab.nonunit_members(8)? {
            let rep = match lab.accp_chain_probe(super::probes::ChainStrategy::Halving, &s) {
                Ok(r) => r,
                Err(Error::UnsupportedElement) => continue,
                Err(e) => return Err(e),
            };
            probes += 1;
            if !rep.stabilized {
                descent = true;
                break;
            }
        }
        Ok((descent, probes))
    }

    fn check_accp(&self, report: &mut ConsistencyReport) -> Result<()> {
        let (s_descent, n1) = self.accp_side(self)?;
        let amb = self.instance().ambient_view();
        let amb_lab = Lab::new(&amb, self.bounds().clone());
        let (g_descent, n2) = self.accp_side(&amb_lab)?;
        report.checked = n1 + n2;
        report.notes.push(format!(
            "semidomain side: {}",
            if s_descent {
                "descent evidence at budget"
            } else {
                "all probes stabilized"
            }
        ));
        report.notes.push(format!(
            "ambient side: {}",
            if g_descent {
                "descent evidence at budget"
            } else {
                "all probes stabilized"
            }
        ));
        if s_descent == g_descent {
            report.outcome = if s_descent {
                "ACCP fails at bounds on both sides".into()
            } else {
                "ACCP holds at bounds on both sides".into()
            };
        } else {
            report.overall = Overall::Inconclusive;
        }
        Ok(())
    }

    fn check_bf(&self, report: &mut ConsistencyReport) -> Result<()> {
        let lf = LengthFn::Degree;
        let corpus = self.instance().enumerate_members(self.bounds())?;
        let s_report = match self.verify_length_function(&lf, &corpus) {
            Ok(r) => r,
            Err(Error::UnsupportedElement) => {
                report.overall = Overall::Inconclusive;
                report
                    .notes
                    .push("degree is not evaluable on this instance".into());
                return Ok(());
            }
            Err(e) => return Err(e),
        };
        report.checked += s_report.corpus_size;
        if !s_report.passed() {
            report.overall = Overall::Inconclusive;
            report.notes.push(
                "degree is not a length function here; no built-in candidate certifies the BF side"
                    .into(),
            );
            return Ok(());
        }
        report
            .notes
            .push("degree is a length function on the semidomain corpus".into());
        // ambient side via the squared pushforward
        let amb = self.instance().ambient_view();
        let amb_lab = Lab::new(&amb, self.bounds().clone());
        let amb_corpus = amb.enumerate_members(self.bounds())?;
        let ell2 = self.ell_squared(&lf);
        let g_report = amb_lab.verify_length_function(&ell2, &amb_corpus)?;
        report.checked += g_report.corpus_size;
        if g_report.passed() {
            report
                .notes
                .push("squared length function verifies on the ambient corpus".into());
            report.outcome = "bounded factorization certified at bounds on both sides".into();
        } else {
            report.overall = Overall::Counterexample(Witness::Note(
                "squared pushforward failed an axiom on the ambient corpus".into(),
            ));
        }
        Ok(())
    }

    /// Divisor-class counts for one probe element at the working height and
    /// at double height: (low, high, decisive).
    fn divisor_growth(&self, lab: &Lab<'_>, s: &Element) -> Result<(usize, usize, bool)> {
        let low = lab.nonassociate_divisor_count(s)?;
        let big = Lab::new(
            lab.instance(),
            lab.bounds()
                .clone()
                .with_height(lab.bounds().max_height * 2),
        );
        let high = big.nonassociate_divisor_count(s)?;
        let (_, complete) = lab.divisors(s)?;
        Ok((low, high, complete))
    }

    fn check_ff(&self, report: &mut ConsistencyReport) -> Result<()> {
        let amb = self.instance().ambient_view();
        let amb_lab = Lab::new(&amb, self.bounds().clone());
        let mut sides = Vec::new();
        for lab in [self, &amb_lab] {
            let mut growing = false;
            let mut decisive = true;
            let mut probes = 0usize;
            for s in lab.nonunit_members(6)? {
                let (low, high, complete) = match self.divisor_growth(lab, &s) {
                    Ok(x) => x,
                    Err(Error::UnsupportedElement) => continue,
                    Err(e) => return Err(e),
                };
                probes += 1;
                report.checked += 1;
                if !complete {
                    decisive = false;
                    if high > low {
                        growing = true;
                    }
                }
            }
            if probes == 0 {
                report.overall = Overall::Inconclusive;
                report.notes.push("no probe elements supported".into());
                return Ok(());
            }
            sides.push((growing, decisive));
        }
        let (s_growing, s_decisive) = sides[0];
        let (g_growing, g_decisive) = sides[1];
        report.notes.push(format!(
            "semidomain side: {}",
            side_label(s_growing, s_decisive)
        ));
        report
            .notes
            .push(format!("ambient side: {}", side_label(g_growing, g_decisive)));
        if s_growing == g_growing {
            report.outcome = if s_growing {
                "divisor classes grow with height on both sides (non-FF evidence)".into()
            } else {
                "divisor classes stable on both sides".into()
            };
        } else {
            report.overall = Overall::Inconclusive;
        }
        Ok(())
    }

    fn check_primes(&self, report: &mut ConsistencyReport) -> Result<()> {
        let trivial_u = matches!(self.instance().u_status(), UStatus::Trivial);
        for p in self.nonunit_members(30)? {
            if trivial_u {
                // descent direction: an ambient prime must have no
                // counterexample pair in the semidomain
                if let Some(true) = self.ambient_irreducible(&p)? {
                    report.checked += 1;
                    if let Some((s1, s2)) = self.prime_refutation_search(&p)? {
                        report.overall = Overall::Counterexample(Witness::Pair(s1, s2));
                        return Ok(());
                    }
                }
            } else {
                // witness soundness for refuted primes
                let verdict = match self.is_prime(&p) {
                    Ok(v) => v,
                    Err(Error::UnsupportedElement) => continue,
                    Err(e) => return Err(e),
                };
                if let crate::semidomain::Verdict::Refuted {
                    witness: Witness::Pair(s1, s2),
                } = &verdict
                {
                    report.checked += 1;
                    let prod = self.instance().mul(s1, s2)?;
                    let sound = self.divides(&p, &prod)?
                        && !self.divides(&p, s1)?
                        && !self.divides(&p, s2)?;
                    if !sound {
                        report.overall =
                            Overall::Counterexample(Witness::Pair(s1.clone(), s2.clone()));
                        return Ok(());
                    }
                }
            }
        }
        if report.checked == 0 {
            report.overall = Overall::Inconclusive;
            report.notes.push("no applicable prime probes".into());
        } else {
            report.notes.push(if trivial_u {
                "ambient primes survive the bounded witness search".into()
            } else {
                "refutation witnesses re-check".into()
            });
        }
        Ok(())
    }

    fn check_uf(&self, report: &mut ConsistencyReport) -> Result<()> {
        // right side: ambient UFD and U(S) in {{0}, S}
        let ambient_ufd = self.instance().ambient_is_ufd();
        let u_trivial = matches!(self.instance().u_status(), UStatus::Trivial);
        let rhs = ambient_ufd.map(|ufd| ufd && u_trivial);
        if let UStatus::Proper { inside, outside } = self.instance().u_status() {
            report.notes.push(format!(
                "invertibles are proper: {} is invertible, {} is not",
                inside, outside
            ));
        }
        // left side: scan for multiple factorizations
        let mut nonunique: Option<(Element, usize)> = None;
        let mut all_complete_singletons = true;
        let mut scanned = 0usize;
        for s in self.witness_probes(25)? {
            let (zs, complete) = match self.factorizations(&s) {
                Ok(x) => x,
                Err(Error::UnsupportedElement) => continue,
                Err(e) => return Err(e),
            };
            scanned += 1;
            report.checked += 1;
            if zs.len() >= 2 {
                nonunique = Some((s.clone(), zs.len()));
                all_complete_singletons = false;
                break;
            }
            if !complete || zs.is_empty() {
                all_complete_singletons = false;
            }
        }
        match rhs {
            Some(true) => {
                if let Some((s, n)) = nonunique {
                    report.notes.push(format!("{} has {} factorizations", s, n));
                    report.overall = Overall::Counterexample(Witness::Element(s));
                } else {
                    report.outcome = "UFS".into();
                    report.notes.push(format!(
                        "all {} scanned factorization sets are singletons{}",
                        scanned,
                        if all_complete_singletons {
                            " (complete)"
                        } else {
                            " (some at bounds)"
                        }
                    ));
                }
            }
            Some(false) => match nonunique {
                Some((s, n)) => {
                    report.outcome = "not UFS".into();
                    report
                        .notes
                        .push(format!("witness: {} has {} distinct factorizations", s, n));
                }
                None => {
                    report.overall = Overall::Inconclusive;
                    report
                        .notes
                        .push("no non-uniqueness witness within bounds".into());
                }
            },
            None => {
                report.overall = Overall::Inconclusive;
                report
                    .notes
                    .push("ambient unique-factorization status unknown".into());
            }
        }
        Ok(())
    }

    fn ambient_hfd(&self) -> Option<bool> {
        use crate::semidomain::InstanceKind;
        match self.instance().kind() {
            InstanceKind::Nat | InstanceKind::SignC0C1 | InstanceKind::NatZ => Some(true),
            // Z + xQ[x] is not atomic, hence not half-factorial
            InstanceKind::NatQ => Some(false),
            InstanceKind::PosQGauss => None,
            InstanceKind::PosMonAlg(m) | InstanceKind::HfsBase(m) => {
                if m.generators().len() == 1 {
                    Some(true)
                } else {
                    None
                }
            }
            InstanceKind::Localized { dset, .. } => match dset {
                crate::semidomain::DSet::PowersOf(_) => Some(true),
                _ => None,
            },
        }
    }

    fn check_hf(&self, report: &mut ConsistencyReport) -> Result<()> {
        // atoms side: A(S) vs S intersect A(G(S)), where ambient
        // irreducibility is decidable
        let mut atoms_match = Some(true);
        let mut mismatch: Option<Element> = None;
        for s in self.nonunit_members(40)? {
            let atom_s = match self.is_atom(&s) {
                Ok(v) => v,
                Err(Error::UnsupportedElement) => continue,
                Err(e) => return Err(e),
            };
            if atom_s.is_unknown() {
                atoms_match = atoms_match.and(None);
                continue;
            }
            match self.ambient_irreducible(&s)? {
                Some(irr) => {
                    report.checked += 1;
                    if atom_s.is_proved() != irr {
                        atoms_match = Some(false);
                        mismatch = Some(s.clone());
                        break;
                    }
                }
                None => atoms_match = atoms_match.and(None),
            }
        }
        // length side: complete length sets singleton or not
        let mut multilength: Option<(Element, Vec<usize>)> = None;
        let mut all_singleton = true;
        for s in self.witness_probes(25)? {
            let ls = match self.length_set(&s) {
                Ok(x) => x,
                Err(Error::UnsupportedElement) => continue,
                Err(e) => return Err(e),
            };
            report.checked += 1;
            if ls.complete && ls.lengths.len() >= 2 {
                multilength = Some((s.clone(), ls.lengths.iter().copied().collect()));
                all_singleton = false;
                break;
            }
            if !ls.complete {
                all_singleton = false;
            }
        }
        // a single decisively-false conjunct settles the right side
        let rhs = match (atoms_match, self.ambient_hfd()) {
            (Some(false), _) | (_, Some(false)) => Some(false),
            (Some(true), Some(true)) => Some(true),
            _ => None,
        };
        match rhs {
            Some(false) => {
                if let Some(s) = &mismatch {
                    report
                        .notes
                        .push(format!("atom {} is not an ambient atom", s));
                }
                match multilength {
                    Some((s, lens)) => {
                        report.outcome = "not HFS".into();
                        report
                            .notes
                            .push(format!("witness: lengths {:?} for {}", lens, s));
                    }
                    None => {
                        report.overall = Overall::Inconclusive;
                        report
                            .notes
                            .push("no multi-length witness within bounds".into());
                    }
                }
            }
            Some(true) => {
                if let Some((s, lens)) = multilength {
                    report.notes.push(format!("lengths {:?} for {}", lens, s));
                    report.overall = Overall::Counterexample(Witness::Element(s));
                } else {
                    report.outcome = "HFS".into();
                    report.notes.push(format!(
                        "atoms match the ambient atoms; length sets singleton{}",
                        if all_singleton { " (complete)" } else { " (at bounds)" }
                    ));
                }
            }
            None => {
                report.overall = Overall::Inconclusive;
                report
                    .notes
                    .push("a side of the equivalence is undecidable here".into());
            }
        }
        Ok(())
    }

    /// Count pairwise non-associate divisors found for `s`.
    pub fn nonassociate_divisor_count(&self, s: &Element) -> Result<usize> {
        let (pairs, _) = self.divisors(s)?;
        let mut reps: Vec<Element> = Vec::new();
        for (d, _) in pairs {
            let mut fresh = true;
            for r in &reps {
                if self.associates(&d, r)?.is_proved() {
                    fresh = false;
                    break;
                }
            }
            if fresh {
                reps.push(d);
            }
        }
        Ok(reps.len())
    }
}

fn side_label(growing: bool, decisive: bool) -> &'static str {
    match (growing, decisive) {
        (true, _) => "divisor classes grow with the height budget",
        (false, true) => "divisor sets complete and stable",
        (false, false) => "no growth observed at bounds",
    }
}
