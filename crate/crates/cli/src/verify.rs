//! Named property suites behind `blobalg verify`.

use std::time::Instant;

use anyhow::Result;
use blobalg::diagram::{blob_product, enumerate_basis, verify_tlb, BlobParams, Family, PresentationReport};
use blobalg::params::{KName, KOp, KPolynomial, LaurentPoly, ParamName};
use blobalg::rep::{check_cellularity, dimension, gram_matrix, standard_basis, Weight};
use blobalg::symplectic::{
    compose_bprime, enumerate_bphi, enumerate_bx, fold_blob_mu, fold_nu, rect_compose, rect_reduce, rect_reduce_first,
    unfold_mux, verify_affine_c, x_product, Sampler, Target,
};
use clap::ValueEnum;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// TLb and affine-C relations for n ≤ 4.
    Presentation,
    /// Rectangular reduction against periodic composition, m ≤ 3.
    Confluence,
    /// Folding maps: μ multiplicative for n ≤ 3, ν and μ^x inverse for m ≤ 3.
    FoldRoundtrip,
    /// Cell datum checks for m ≤ 2.
    Cellularity,
    /// Enumerated bases against the closed form for m ≤ 6.
    Dims,
    /// The two closed-form Gram determinants at m = 3.
    GramPaperIdentities,
}

impl Suite {
    pub fn all() -> &'static [Suite] {
        &[
            Suite::Presentation,
            Suite::Confluence,
            Suite::FoldRoundtrip,
            Suite::Cellularity,
            Suite::Dims,
            Suite::GramPaperIdentities,
        ]
    }

    fn name(self) -> String {
        self.to_possible_value().expect("no skipped variants").get_name().to_string()
    }
}

/// Checks made, and the first failure if any.
struct Outcome {
    checks: usize,
    failure: Option<String>,
}

impl Outcome {
    fn new() -> Self {
        Outcome { checks: 0, failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }
}

fn presentation() -> Result<Outcome> {
    let mut out = Outcome::new();
    let mut absorb = |r: PresentationReport| {
        for c in &r.checks {
            out.check(c.passed, || format!("{} n={} {} {}", r.family, r.n, c.relation, c.instance));
        }
    };
    for n in 1..=4 {
        absorb(verify_tlb(n, &BlobParams::default())?);
        absorb(verify_affine_c(n, Target::Small)?);
        absorb(verify_affine_c(n, Target::Big)?);
    }
    Ok(out)
}

fn confluence(samples: usize, seed: u64) -> Result<Outcome> {
    let mut out = Outcome::new();
    for m in 0..=3 {
        let basis = enumerate_bx(m)?;
        for a in &basis {
            for b in &basis {
                out.check(rect_compose(a, b)? == x_product(a, b)?, || format!("{a} * {b}"));
            }
        }
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let samplers: Vec<Sampler> = (1..=3).map(Sampler::new).collect::<blobalg::Result<_>>()?;
    for i in 0..samples {
        let x = samplers[i % samplers.len()].sample(&mut rng, 4)?;
        let first = rect_reduce_first(&x.diagram)?;
        let mut order = StdRng::seed_from_u64(seed ^ i as u64);
        let shuffled = rect_reduce(&x.diagram, &mut |n| order.gen_range(0..n))?;
        let periodic = x.periodic_value()?;
        out.check(first == shuffled && first == periodic, || format!("sample {}", x.diagram));
    }
    Ok(out)
}

fn fold_roundtrip() -> Result<Outcome> {
    let mut out = Outcome::new();
    let params = BlobParams::default();
    for n in 1..=3 {
        let basis = enumerate_basis(Family::Blob, n)?;
        for a in &basis {
            for b in &basis {
                let (k, c) = blob_product(a, b, &params)?;
                let rhs = compose_bprime(&fold_blob_mu(a)?, &fold_blob_mu(b)?, &params)?;
                out.check((k, fold_blob_mu(&c)?) == rhs, || format!("μ on {a} * {b}"));
            }
        }
    }
    for m in 0..=3 {
        for d in enumerate_bx(m)? {
            out.check(fold_nu(&unfold_mux(&d)?)? == d, || format!("ν∘μ^x on {d}"));
        }
        for s in enumerate_bphi(m) {
            out.check(unfold_mux(&fold_nu(&s)?)? == s, || format!("μ^x∘ν on {s}"));
        }
    }
    Ok(out)
}

fn cellularity() -> Result<Outcome> {
    let mut out = Outcome::new();
    for m in 0..=2 {
        let r = check_cellularity(m)?;
        out.check(r.passed(), || format!("m={m}: {}", r.failures.join("; ")));
    }
    Ok(out)
}

fn dims() -> Result<Outcome> {
    let mut out = Outcome::new();
    for m in 0..=6 {
        for w in Weight::all(m) {
            let n = standard_basis(m, w.value())?.len() as u64;
            let f = dimension(m, w.value())?;
            out.check(n == f, || format!("m={m} l={w}: {n} vs {f}"));
        }
    }
    for m in 0..=4 {
        let s: u64 = Weight::all(m).iter().map(|w| dimension(m, w.value()).map(|d| d * d)).sum::<blobalg::Result<_>>()?;
        let n = enumerate_bphi(m).len() as u64;
        out.check(s == n, || format!("m={m}: Σ dim² = {s}, algebra {n}"));
    }
    Ok(out)
}

fn gram_identities() -> Result<Outcome> {
    let mut out = Outcome::new();
    let p = LaurentPoly::param;
    let k = |name, op| KPolynomial::new(name, op).expansion();
    let minus_one = gram_matrix(3, -1)?.determinant;
    let want = &(&p(ParamName::KappaL) * &p(ParamName::KappaR)) * &k(KName::K3, KOp::Id);
    out.check(minus_one == want, || format!("Γ6(-1) = {minus_one}"));
    let zero = gram_matrix(3, 0)?.determinant;
    let want = [
        p(ParamName::KappaLR).pow(4),
        k(KName::K1, KOp::Id).pow(4),
        k(KName::K1, KOp::PhiPsi),
        k(KName::K2, KOp::Psi),
        k(KName::K2, KOp::Phi),
        k(KName::K13, KOp::Id),
    ]
    .iter()
    .fold(LaurentPoly::one(), |acc, f| &acc * f);
    out.check(zero == want, || format!("Γ6(0) = {zero}"));
    Ok(out)
}

/// Run the suites and render the table. Timings go to stderr so the table
/// itself is deterministic.
pub fn run(suites: &[Suite], samples: usize, seed: u64) -> Result<(String, bool)> {
    let mut table = format!("{:<22} {:>7}  status\n", "suite", "checks");
    let mut all_ok = true;
    for &s in suites {
        let start = Instant::now();
        let outcome = match s {
            Suite::Presentation => presentation()?,
            Suite::Confluence => confluence(samples, seed)?,
            Suite::FoldRoundtrip => fold_roundtrip()?,
            Suite::Cellularity => cellularity()?,
            Suite::Dims => dims()?,
            Suite::GramPaperIdentities => gram_identities()?,
        };
        eprintln!("{} took {:.2}s", s.name(), start.elapsed().as_secs_f64());
        let status = match &outcome.failure {
            None => "pass".to_string(),
            Some(why) => {
                all_ok = false;
                format!("FAIL {why}")
            }
        };
        table.push_str(&format!("{:<22} {:>7}  {status}\n", s.name(), outcome.checks));
    }
    Ok((table, all_ok))
}
