//! Machine-checked paradoxical decompositions.
//!
//! A certificate names a partition of an infinite family into symbolic
//! pieces and a list of injective translations carrying claimed images.
//! Disjointness, coverage, injectivity and both image inclusions are facts
//! about the closed-form membership oracles; `verify` cross-validates all of
//! them exhaustively inside a finite ball and then renders the measure
//! inequality the decomposition forces.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::actions::{acts_injectively, Injectivity};
use crate::element::Element;
use crate::error::{Error, Result};
use crate::semigroup::{Semigroup, Side};
use crate::subset::FiniteSubset;
use crate::symbolic::SymbolicSet;

/// One translation claim: `element` acts injectively on `domain` (by
/// `side`), and the image is exactly `image`. When `image_parts` is
/// nonempty it is an exact disjoint decomposition of the image, checked
/// within the ball alongside the inclusion itself.
#[derive(Debug, Clone)]
pub struct ImageClaim {
    element: Element,
    side: Side,
    domain: SymbolicSet,
    image: SymbolicSet,
    image_parts: Vec<SymbolicSet>,
}

impl ImageClaim {
    pub fn new(
        element: Element,
        side: Side,
        domain: SymbolicSet,
        image: SymbolicSet,
    ) -> ImageClaim {
        ImageClaim {
            element,
            side,
            domain,
            image,
            image_parts: Vec::new(),
        }
    }

    pub fn with_parts(mut self, parts: Vec<SymbolicSet>) -> ImageClaim {
        self.image_parts = parts;
        self
    }

    pub fn element(&self) -> &Element {
        &self.element
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn domain(&self) -> &SymbolicSet {
        &self.domain
    }

    pub fn image(&self) -> &SymbolicSet {
        &self.image
    }

    pub fn image_parts(&self) -> &[SymbolicSet] {
        &self.image_parts
    }

    fn describe(&self) -> String {
        let verb = match self.side {
            Side::Left => "acts injectively on the left of",
            Side::Right => "acts injectively on the right of",
        };
        let mut line = format!(
            "{} {} {} with image {}",
            self.element, verb, self.domain, self.image
        );
        if !self.image_parts.is_empty() {
            let parts: Vec<String> = self.image_parts.iter().map(|p| p.to_string()).collect();
            line.push_str(&format!(" = {}", parts.join(" ⊔ ")));
        }
        line
    }
}

/// The bundled decompositions (and one doomed attempt).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    /// Free semigroup on two letters: S = {a,b} ⊔ aS ⊔ bS.
    FreeTwo,
    /// Polycyclic monoid on two generators: five pieces, two of which
    /// absorb almost everything under the inverse generators.
    PolycyclicTwo,
    /// Bicyclic monoid split as pB, qB; rejected because pB is everything.
    BicyclicAttempt,
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Builtin> {
        match s {
            "fs2" => Ok(Builtin::FreeTwo),
            "p2" => Ok(Builtin::PolycyclicTwo),
            "bicyclic" => Ok(Builtin::BicyclicAttempt),
            other => Err(Error::Parse(format!(
                "unknown certificate '{other}', expected fs2, p2 or bicyclic"
            ))),
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Builtin::FreeTwo => "fs2",
            Builtin::PolycyclicTwo => "p2",
            Builtin::BicyclicAttempt => "bicyclic",
        })
    }
}

/// A paradoxical decomposition plus its verification state. Fresh
/// certificates are unverified; `verify` consumes one and returns it with
/// the flag, the failure witness (if any) and the rendered report filled in.
#[derive(Debug, Clone)]
pub struct ParadoxCertificate {
    family: Semigroup,
    pieces: Vec<SymbolicSet>,
    claims: Vec<ImageClaim>,
    derivation: Vec<String>,
    radius: usize,
    verified: bool,
    failure: Option<String>,
    report: String,
}

impl ParadoxCertificate {
    /// Assemble an unverified certificate. The derivation lines are the
    /// measure algebra rendered into the final report; they should end with
    /// the forced inequality.
    pub fn new(
        family: &Semigroup,
        pieces: Vec<SymbolicSet>,
        claims: Vec<ImageClaim>,
        derivation: Vec<String>,
    ) -> Result<ParadoxCertificate> {
        for p in &pieces {
            if p.family() != family {
                return Err(Error::FamilyMismatch {
                    expected: family.name(),
                    got: p.family().name(),
                });
            }
        }
        for c in &claims {
            family.check_member(&c.element)?;
            for set in [&c.domain, &c.image]
                .into_iter()
                .chain(c.image_parts.iter())
            {
                if set.family() != family {
                    return Err(Error::FamilyMismatch {
                        expected: family.name(),
                        got: set.family().name(),
                    });
                }
            }
        }
        Ok(ParadoxCertificate {
            family: family.clone(),
            pieces,
            claims,
            derivation,
            radius: 0,
            verified: false,
            failure: None,
            report: String::new(),
        })
    }

    pub fn builtin(which: Builtin) -> ParadoxCertificate {
        match which {
            Builtin::FreeTwo => free_two(),
            Builtin::PolycyclicTwo => polycyclic_two(),
            Builtin::BicyclicAttempt => bicyclic_attempt(),
        }
    }

    pub fn family(&self) -> &Semigroup {
        &self.family
    }

    pub fn pieces(&self) -> &[SymbolicSet] {
        &self.pieces
    }

    pub fn claims(&self) -> &[ImageClaim] {
        &self.claims
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn verified(&self) -> bool {
        self.verified
    }

    pub fn failure(&self) -> Option<&str> {
        self.failure.as_deref()
    }

    pub fn report(&self) -> &str {
        &self.report
    }

    /// Cross-validate every structural claim inside the radius ball. Checks
    /// run in claim order and stop at the first violation, which becomes the
    /// failure witness; a clean pass renders the inequality report.
    pub fn verify(mut self, radius: usize) -> Result<ParadoxCertificate> {
        self.radius = radius;
        let ball = self.family.window(radius)?;
        if ball.len() == 0 {
            return Err(Error::EmptyWindow { n: radius });
        }

        match self.run_checks(radius, &ball)? {
            Ok(checked) => {
                self.verified = true;
                self.failure = None;
                self.report = self.render_verified(radius, ball.len(), &checked);
            }
            Err(witness) => {
                self.verified = false;
                self.report = self.render_rejected(radius, ball.len(), &witness);
                self.failure = Some(witness);
            }
        }
        Ok(self)
    }

    /// Inner result: Ok(per-claim checked counts) or the first violation.
    fn run_checks(&self, radius: usize, ball: &FiniteSubset) -> Result<std::result::Result<Vec<usize>, String>> {
        // Pieces tile the ball: every element in exactly one piece.
        for e in ball.iter() {
            let mut hit: Option<usize> = None;
            for (i, piece) in self.pieces.iter().enumerate() {
                if !piece.contains(e)? {
                    continue;
                }
                match hit {
                    None => hit = Some(i),
                    Some(j) => {
                        return Ok(Err(format!(
                            "pieces are not disjoint: {e} lies in {} and {}",
                            self.pieces[j], self.pieces[i]
                        )))
                    }
                }
            }
            if hit.is_none() {
                return Ok(Err(format!("pieces do not cover the ball: {e} is in no piece")));
            }
        }

        let mut checked = Vec::with_capacity(self.claims.len());
        for claim in &self.claims {
            let domain_ball = claim.domain.intersect_window(radius)?;
            checked.push(domain_ball.len());

            match acts_injectively(claim.side, &claim.element, &domain_ball)? {
                Injectivity::Injective => {}
                Injectivity::Collision { a, b } => {
                    return Ok(Err(format!(
                        "{} does not act injectively on {}: {a} and {b} collide",
                        claim.element, claim.domain
                    )))
                }
            }

            // Forward: translated domain stays inside the claimed image.
            for w in domain_ball.iter() {
                let x = self.family.translate(claim.side, &claim.element, w)?;
                if !claim.image.contains(&x)? {
                    return Ok(Err(format!(
                        "image too small: {}·{w} = {x} escapes {}",
                        claim.element, claim.image
                    )));
                }
            }

            // Backward: everything claimed is actually reached. Preimages
            // are searched in a padded ball; the pad covers how far a
            // product can outgrow its factors.
            let pad = self.family.window_pad(&claim.element)?;
            let search = claim.domain.intersect_window(radius + pad)?;
            let mut reached: BTreeSet<Element> = BTreeSet::new();
            for w in search.iter() {
                reached.insert(self.family.translate(claim.side, &claim.element, w)?);
            }
            for x in claim.image.intersect_window(radius)?.iter() {
                if !reached.contains(x) {
                    return Ok(Err(format!(
                        "image too large: {x} in {} has no preimage in {} within radius {}",
                        claim.image,
                        claim.domain,
                        radius + pad
                    )));
                }
            }

            // Declared decomposition: within the ball the parts tile the
            // image exactly.
            if !claim.image_parts.is_empty() {
                for e in ball.iter() {
                    let in_image = claim.image.contains(e)?;
                    let mut hits = 0usize;
                    for part in &claim.image_parts {
                        if part.contains(e)? {
                            hits += 1;
                        }
                    }
                    if in_image && hits != 1 {
                        return Ok(Err(format!(
                            "image decomposition of {} covers {e} {hits} times",
                            claim.image
                        )));
                    }
                    if !in_image && hits != 0 {
                        return Ok(Err(format!(
                            "image decomposition of {} spills outside: {e}",
                            claim.image
                        )));
                    }
                }
            }
        }
        Ok(Ok(checked))
    }

    fn render_verified(&self, radius: usize, ball: usize, checked: &[usize]) -> String {
        let mut lines = Vec::new();
        lines.push(format!(
            "certificate verified: paradoxical decomposition of {}",
            self.family.name()
        ));
        lines.push(format!(
            "ball: radius {radius}, {ball} elements; memberships are closed-form, the ball sweep is an independent cross-check"
        ));
        let pieces: Vec<String> = self.pieces.iter().map(|p| p.to_string()).collect();
        lines.push(format!("pieces: all = {}", pieces.join(" ⊔ ")));
        for (claim, n) in self.claims.iter().zip(checked) {
            lines.push(format!("claim: {}   [{n} ball elements checked]", claim.describe()));
        }
        lines.push("for any fairly invariant probability measure μ:".into());
        lines.extend(self.derivation.iter().cloned());
        lines.join("\n")
    }

    fn render_rejected(&self, radius: usize, ball: usize, witness: &str) -> String {
        let pieces: Vec<String> = self.pieces.iter().map(|p| p.to_string()).collect();
        [
            format!(
                "certificate rejected: claimed decomposition of {}",
                self.family.name()
            ),
            format!("ball: radius {radius}, {ball} elements"),
            format!("pieces: {}", pieces.join(", ")),
            format!("rejected: {witness}"),
        ]
        .join("\n")
    }
}

/// S = {a,b} ⊔ aS ⊔ bS on the free semigroup with two letters; both
/// generators translate the whole carrier onto their ideal, so any fair
/// measure counts the carrier twice.
fn free_two() -> ParadoxCertificate {
    let s = Semigroup::free_word(2).expect("rank 2 is valid");
    let a = s.parse_element("a").expect("generator literal");
    let b = s.parse_element("b").expect("generator literal");
    let heads = FiniteSubset::new(&s, [a.clone(), b.clone()]).expect("two fresh generators");
    let pieces = vec![
        SymbolicSet::finite_list(heads),
        SymbolicSet::right_ideal(&a),
        SymbolicSet::right_ideal(&b),
    ];
    let claims = vec![
        ImageClaim::new(
            a.clone(),
            Side::Left,
            SymbolicSet::all(&s),
            SymbolicSet::right_ideal(&a),
        ),
        ImageClaim::new(
            b.clone(),
            Side::Left,
            SymbolicSet::all(&s),
            SymbolicSet::right_ideal(&b),
        ),
    ];
    let derivation = vec![
        "  μ(ideal:a) = μ(all) = 1 and μ(ideal:b) = μ(all) = 1   [injective translations]".into(),
        "  1 = μ(all) = μ(list:a,b) + μ(ideal:a) + μ(ideal:b) ≥ 0 + 1 + 1".into(),
        "conclusion: 1 ≥ 2".into(),
    ];
    ParadoxCertificate::new(&s, pieces, claims, derivation).expect("one family throughout")
}

/// Five-piece split of the polycyclic monoid on two generators. The inverse
/// generators reach everything except the other cylinders, and a chain of
/// singleton moves pins μ({1}) = μ({Q}) = μ({0}).
fn polycyclic_two() -> ParadoxCertificate {
    let s = Semigroup::polycyclic2();
    let parse = |lit: &str| s.parse_element(lit).expect("fixed literal");
    let p_inv = parse("P");
    let q_inv = parse("Q");
    let p = parse("p");
    let q = parse("q");
    let zero = parse("0");
    let one = parse("1");
    let cyl = |e: &Element| SymbolicSet::prefix(e).expect("word family");
    let fl = |es: &[&Element]| {
        SymbolicSet::finite_list(
            FiniteSubset::new(&s, es.iter().map(|e| (*e).clone())).expect("fixed elements"),
        )
    };
    let pieces = vec![
        cyl(&p_inv),
        cyl(&q_inv),
        cyl(&p),
        cyl(&q),
        fl(&[&zero, &one]),
    ];
    let claims = vec![
        ImageClaim::new(
            p_inv.clone(),
            Side::Left,
            SymbolicSet::all(&s),
            SymbolicSet::right_ideal(&p_inv),
        )
        .with_parts(vec![cyl(&p_inv), fl(&[&zero])]),
        ImageClaim::new(
            q_inv.clone(),
            Side::Left,
            SymbolicSet::all(&s),
            SymbolicSet::right_ideal(&q_inv),
        )
        .with_parts(vec![cyl(&q_inv), fl(&[&zero])]),
        ImageClaim::new(q_inv.clone(), Side::Left, fl(&[&one]), fl(&[&q_inv])),
        ImageClaim::new(p.clone(), Side::Left, fl(&[&q_inv]), fl(&[&zero])),
    ];
    let derivation = vec![
        "  write m = μ(list:0); the singleton chain Q·1 = Q, p·Q = 0 forces μ(list:1) = μ(list:Q) = m".into(),
        "  μ(ideal:P) = μ(all) = 1, and ideal:P = prefix:P ⊔ list:0, so μ(prefix:P) = 1 − m".into(),
        "  μ(ideal:Q) = μ(all) = 1, and ideal:Q = prefix:Q ⊔ list:0, so μ(prefix:Q) = 1 − m".into(),
        "  1 = μ(all) = μ(prefix:P) + μ(prefix:Q) + μ(prefix:p) + μ(prefix:q) + μ(list:0) + μ(list:1)".into(),
        "    = (1 − m) + (1 − m) + μ(prefix:p) + μ(prefix:q) + 2m = 2 + μ(prefix:p) + μ(prefix:q)".into(),
        "conclusion: 1 ≥ 2".into(),
    ];
    ParadoxCertificate::new(&s, pieces, claims, derivation).expect("one family throughout")
}

/// The bicyclic monoid refuses this treatment: pq = 1 makes pB the whole
/// carrier, so the two "pieces" overlap. Verification finds the first
/// witness in ball order.
fn bicyclic_attempt() -> ParadoxCertificate {
    let s = Semigroup::bicyclic();
    let p = s.parse_element("p").expect("generator literal");
    let q = s.parse_element("q").expect("generator literal");
    let pieces = vec![SymbolicSet::right_ideal(&p), SymbolicSet::right_ideal(&q)];
    let claims = vec![
        ImageClaim::new(
            p.clone(),
            Side::Left,
            SymbolicSet::all(&s),
            SymbolicSet::right_ideal(&p),
        ),
        ImageClaim::new(
            q.clone(),
            Side::Left,
            SymbolicSet::all(&s),
            SymbolicSet::right_ideal(&q),
        ),
    ];
    let derivation = vec!["conclusion: 1 ≥ 2".into()];
    ParadoxCertificate::new(&s, pieces, claims, derivation).expect("one family throughout")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_semigroup_certificate_verifies() {
        let cert = ParadoxCertificate::builtin(Builtin::FreeTwo)
            .verify(10)
            .unwrap();
        assert!(cert.verified());
        assert!(cert.failure().is_none());
        assert!(cert.report().ends_with("1 ≥ 2"));
        assert!(cert.report().contains("radius 10, 2046 elements"));
    }

    #[test]
    fn polycyclic_certificate_verifies() {
        let cert = ParadoxCertificate::builtin(Builtin::PolycyclicTwo)
            .verify(6)
            .unwrap();
        assert!(cert.verified());
        assert!(cert.report().ends_with("1 ≥ 2"));
        assert!(cert.report().contains("prefix:P ⊔ list:0"));
    }

    #[test]
    fn bicyclic_attempt_is_rejected_with_the_first_overlap() {
        let cert = ParadoxCertificate::builtin(Builtin::BicyclicAttempt)
            .verify(3)
            .unwrap();
        assert!(!cert.verified());
        let failure = cert.failure().unwrap();
        assert!(failure.contains("not disjoint"), "{failure}");
        assert!(failure.contains('q'), "witness should be q: {failure}");
        assert!(cert.report().contains("rejected"));
        assert!(!cert.report().ends_with("1 ≥ 2"));
    }

    #[test]
    fn tampered_image_claim_is_caught() {
        // Claim a's image is b's ideal: the forward check fails at once.
        let s = Semigroup::free_word(2).unwrap();
        let a = s.parse_element("a").unwrap();
        let b = s.parse_element("b").unwrap();
        let heads = FiniteSubset::new(&s, [a.clone(), b.clone()]).unwrap();
        let cert = ParadoxCertificate::new(
            &s,
            vec![
                SymbolicSet::finite_list(heads),
                SymbolicSet::right_ideal(&a),
                SymbolicSet::right_ideal(&b),
            ],
            vec![ImageClaim::new(
                a.clone(),
                Side::Left,
                SymbolicSet::all(&s),
                SymbolicSet::right_ideal(&b),
            )],
            vec!["conclusion: 1 ≥ 2".into()],
        )
        .unwrap();
        let cert = cert.verify(4).unwrap();
        assert!(!cert.verified());
        assert!(cert.failure().unwrap().contains("image too small"));
    }

    #[test]
    fn overfull_image_claim_is_caught() {
        // Claim q⁻¹ reaches the whole polycyclic monoid: prefix:p has no
        // preimage, so the backward sweep rejects.
        let s = Semigroup::polycyclic2();
        let q_inv = s.parse_element("Q").unwrap();
        let zero = s.parse_element("0").unwrap();
        let one = s.parse_element("1").unwrap();
        let heads = FiniteSubset::new(&s, [zero, one]).unwrap();
        let cert = ParadoxCertificate::new(
            &s,
            vec![
                SymbolicSet::prefix(&q_inv).unwrap(),
                SymbolicSet::prefix(&s.parse_element("p").unwrap()).unwrap(),
                SymbolicSet::prefix(&s.parse_element("q").unwrap()).unwrap(),
                SymbolicSet::prefix(&s.parse_element("P").unwrap()).unwrap(),
                SymbolicSet::finite_list(heads),
            ],
            vec![ImageClaim::new(
                q_inv,
                Side::Left,
                SymbolicSet::all(&s),
                SymbolicSet::all(&s),
            )],
            vec!["conclusion: 1 ≥ 2".into()],
        )
        .unwrap();
        let cert = cert.verify(4).unwrap();
        assert!(!cert.verified());
        assert!(cert.failure().unwrap().contains("image too large"));
    }

    #[test]
    fn missing_piece_fails_coverage() {
        let s = Semigroup::free_word(2).unwrap();
        let a = s.parse_element("a").unwrap();
        let b = s.parse_element("b").unwrap();
        let cert = ParadoxCertificate::new(
            &s,
            vec![SymbolicSet::right_ideal(&a), SymbolicSet::right_ideal(&b)],
            vec![],
            vec!["conclusion: 1 ≥ 2".into()],
        )
        .unwrap();
        let cert = cert.verify(3).unwrap();
        assert!(!cert.verified());
        assert!(cert.failure().unwrap().contains("cover"));
    }

    #[test]
    fn builtins_parse_and_render() {
        for (text, which) in [
            ("fs2", Builtin::FreeTwo),
            ("p2", Builtin::PolycyclicTwo),
            ("bicyclic", Builtin::BicyclicAttempt),
        ] {
            assert_eq!(text.parse::<Builtin>().unwrap(), which);
            assert_eq!(which.to_string(), text);
        }
        assert!("fs3".parse::<Builtin>().is_err());
    }

    #[test]
    fn polycyclic_chain_claims_hold_alone() {
        // The two singleton moves that pin the masses of 1, Q and 0.
        let s = Semigroup::polycyclic2();
        let q_inv = s.parse_element("Q").unwrap();
        let one = s.parse_element("1").unwrap();
        let zero = s.parse_element("0").unwrap();
        assert_eq!(s.mul(&q_inv, &one).unwrap(), q_inv);
        assert_eq!(
            s.mul(&s.parse_element("p").unwrap(), &q_inv).unwrap(),
            zero
        );
    }

    #[test]
    fn verification_radius_is_recorded() {
        let cert = ParadoxCertificate::builtin(Builtin::FreeTwo)
            .verify(5)
            .unwrap();
        assert_eq!(cert.radius(), 5);
        assert_eq!(cert.claims().len(), 2);
        assert_eq!(cert.pieces().len(), 3);
    }
}
