//! The `verify` suites: published values, algebraic invariants on seeded
//! random complexes, and the Kruskal–Katona oracles.

use clap::ValueEnum;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use simpdim::barycentric::{
    all_complexes, check_against_compression, check_against_enumeration, conjecture_a_delta,
    limit_constant, operator_matrix, pf_eigenvector, refine, refine_fvector,
};
use simpdim::complex::{
    dim_inductive, dim_inductive_graph, dim_max, euler_characteristic, join, sphere_genus_sum,
};
use simpdim::experiments::{
    delta, delta_max, er_dim_avg_expectation, inductive_dim_polynomial, random_complex_seeded,
    DimPolynomial,
};
use simpdim::genfun::{dim_avg_plus, genus, variance_plus};
use simpdim::rational::{decimal_digits, int, ratio, to_f64};
use simpdim::{Complex, FVector, Family, Graph};

use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    PaperValues,
    Invariants,
    Oracle,
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checked: usize,
    pub failures: Vec<String>,
}

/// Values as they appear in failure messages.
trait Shown {
    fn shown(&self) -> String;
}

macro_rules! shown_by_display {
    ($($t:ty),*) => {
        $(impl Shown for $t {
            fn shown(&self) -> String {
                self.to_string()
            }
        })*
    };
}

shown_by_display!(
    BigRational,
    BigUint,
    num_bigint::BigInt,
    FVector,
    DimPolynomial,
    usize,
    i64
);

impl<T: Shown> Shown for Vec<T> {
    fn shown(&self) -> String {
        let parts: Vec<String> = self.iter().map(Shown::shown).collect();
        format!("[{}]", parts.join(", "))
    }
}

impl Report {
    fn check<T: PartialEq + Shown>(&mut self, name: &str, got: T, want: T) {
        self.checked += 1;
        if got != want {
            self.failures.push(format!(
                "{name}: got {}, want {}",
                got.shown(),
                want.shown()
            ));
        }
    }

    fn require(&mut self, name: &str, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures.push(name.to_string());
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self, suite: Suite) -> Value {
        let name = suite.to_possible_value().map(|v| v.get_name().to_string());
        json!({
            "suite": name,
            "checked": self.checked,
            "failed": self.failures.len(),
            "failures": self.failures,
        })
    }
}

#[derive(Clone, Debug)]
pub struct Options {
    /// Skip the d = 500 constant and the n = 5 exhaustive average.
    pub quick: bool,
    pub samples: u64,
    pub seed: u64,
    pub max_augmented: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            quick: false,
            samples: 500,
            seed: 0,
            max_augmented: 32,
        }
    }
}

pub fn run(suite: Suite, opts: &Options) -> Result<Report> {
    let mut r = Report::default();
    match suite {
        Suite::PaperValues => paper_values(&mut r, opts)?,
        Suite::Invariants => invariants(&mut r, opts)?,
        Suite::Oracle => oracle(&mut r, opts)?,
    }
    Ok(r)
}

fn gen(faces: &[&[u32]]) -> Result<Complex> {
    Ok(Complex::generate(faces.iter().map(|f| f.to_vec()))?)
}

fn fv(g: &Complex) -> FVector {
    FVector::of(g)
}

fn dim_plus(g: &Complex) -> BigRational {
    dim_inductive(g) + BigRational::one()
}

fn paper_values(r: &mut Report, opts: &Options) -> Result<()> {
    let house = gen(&[&[2, 3, 5], &[1, 4], &[1, 2], &[3, 4]])?;
    let rabbit = gen(&[&[1, 2, 3], &[3, 4], &[3, 5]])?;
    let both = join(&house, &rabbit);
    let expected = [
        (
            "house",
            &house,
            ratio(20, 13),
            ratio(61, 24),
            ratio(37, 15),
            3,
        ),
        ("rabbit", &rabbit, ratio(3, 2), ratio(13, 5), ratio(5, 2), 3),
        (
            "house+rabbit",
            &both,
            ratio(79, 26),
            ratio(617, 120),
            ratio(149, 30),
            6,
        ),
    ];
    for (name, g, avg, ind, graph, maxp) in expected {
        r.check(&format!("Dim+({name})"), dim_avg_plus(&fv(g)), avg);
        r.check(&format!("dim+({name})"), dim_plus(g), ind);
        r.check(
            &format!("graph dim+({name})"),
            dim_inductive_graph(&Graph::from_skeleton(g)) + BigRational::one(),
            graph,
        );
        r.check(&format!("max+({name})"), dim_max(g) + 1, maxp);
    }

    for n in 1..=20i64 {
        let u = n as usize;
        r.check(
            &format!("Dim+(E{n})"),
            dim_avg_plus(&fv(&Family::Points(u).build()?)),
            ratio(n, n + 1),
        );
        let kf = FVector::new((1..=u).map(|k| binomial(u, k)).collect());
        r.check(&format!("Dim+(K{n})"), dim_avg_plus(&kf), ratio(n, 2));
        r.check(
            &format!("Dim+(K{n},{n})"),
            dim_avg_plus(&fv(&Family::CompleteBipartite(u, u).build()?)),
            ratio(2 * n, n + 1),
        );
        if n >= 3 {
            r.check(
                &format!("Dim+(C{n})"),
                dim_avg_plus(&fv(&Family::Cycle(u).build()?)),
                ratio(3 * n, 2 * n + 1),
            );
        }
        if n >= 2 {
            let p = Family::Path(u).build()?;
            r.check(
                &format!("Dim+(P{n}) = (3n-2)/(2n-1)"),
                dim_avg_plus(&fv(&p)),
                ratio(3 * n - 2, 2 * n - 1),
            );
        }
    }

    let c4k3 = join(&Family::Cycle(4).build()?, &Family::Complete(3).build()?);
    r.check(
        "f(C4+K3)",
        fv(&c4k3),
        FVector::from_counts([7, 19, 25, 16, 4]),
    );
    r.check("Dim+(C4+K3)", dim_avg_plus(&fv(&c4k3)), ratio(17, 6));
    r.check(
        "Dim+(K12,2)",
        dim_avg_plus(&fv(&Family::CompleteBipartite(12, 2).build()?)),
        ratio(62, 39),
    );

    let mut chain = |name: &str, start: FVector, want: Vec<BigRational>| {
        let mut cur = start;
        let mut got = vec![dim_avg_plus(&cur)];
        for _ in 1..want.len() {
            cur = refine_fvector(&cur);
            got.push(dim_avg_plus(&cur));
        }
        r.check(name, got, want);
    };
    chain(
        "octahedron trajectory",
        fv(&Family::Octahedron.build()?),
        vec![int(2), ratio(314, 147)],
    );
    chain(
        "icosahedron trajectory",
        fv(&Family::Icosahedron.build()?),
        vec![ratio(44, 21), ratio(782, 363), ratio(4682, 2163)],
    );
    chain(
        "(15,36,16,1) trajectory",
        FVector::from_counts([15, 36, 16, 1]),
        vec![ratio(139, 69), ratio(84, 37)],
    );

    let a = operator_matrix(10);
    r.check("A10[5,8]", a.entry(5, 8).clone(), BigUint::from(126000u32));
    r.check(
        "A10[11,11]",
        a.entry(11, 11).clone(),
        BigUint::from(39916800u32),
    );
    r.check(
        "A10[4,11]",
        a.entry(4, 11).clone(),
        BigUint::from(3498000u32),
    );
    r.check(
        "pf(2)",
        pf_eigenvector(2).direction().to_vec(),
        [1u32, 3, 2].map(BigUint::from).to_vec(),
    );
    r.check("C1", limit_constant(1), ratio(3, 2));
    r.check("C2", limit_constant(2), ratio(13, 6));

    let c100 = limit_constant(100);
    r.require(
        "C100 = 72.828 +- 0.001",
        (to_f64(&c100) - 72.828).abs() <= 1e-3,
    );
    r.check(
        "digits of reduced numerator of C100",
        decimal_digits(c100.numer()),
        4423,
    );
    r.check(
        "digits of reduced denominator of C100",
        decimal_digits(c100.denom()),
        4423,
    );
    if !opts.quick {
        let c500 = to_f64(&(limit_constant(500) / int(500)));
        r.require(
            "C500/500 = 0.722733 +- 1e-6",
            (c500 - 0.722733).abs() <= 1e-6,
        );
    }

    let deltas = [
        ratio(0, 1),
        ratio(1, 6),
        ratio(5, 13),
        ratio(91, 150),
        ratio(448, 541),
    ];
    for (n, want) in (1..=5usize).zip(deltas) {
        r.check(
            &format!("conjecture A delta(K{n})"),
            conjecture_a_delta(&fv(&Family::Complete(n).build()?)),
            want,
        );
    }
    r.check(
        "conjecture A delta(K3,3)",
        conjecture_a_delta(&fv(&Family::CompleteBipartite(3, 3).build()?)),
        BigRational::zero(),
    );

    let averages = [
        ratio(1, 2),
        ratio(5, 6),
        ratio(35, 32),
        ratio(6593, 5040),
        ratio(18890551, 12673024),
    ];
    let last = if opts.quick { 4 } else { 5 };
    for (n, want) in (1..=last).zip(averages) {
        r.check(
            &format!("E[Dim+] n={n}, p=1/2"),
            er_dim_avg_expectation(n, &ratio(1, 2))?,
            want,
        );
    }

    r.check(
        "d3(p)",
        inductive_dim_polynomial(3),
        DimPolynomial::from_integers(&[0, 2, -1, 1]),
    );
    r.check(
        "d4(p)",
        inductive_dim_polynomial(4),
        DimPolynomial::from_integers(&[0, 3, -3, 4, -1, -1, 1]),
    );

    let vars = [
        ratio(1, 8),
        ratio(1, 4),
        ratio(15, 32),
        ratio(3, 4),
        ratio(135, 128),
    ];
    for (n, want) in (1..=5usize).zip(vars) {
        r.check(
            &format!("Var+(K{n})"),
            variance_plus(&fv(&Family::Complete(n).build()?)),
            want,
        );
    }

    r.check("max delta, n=4", delta_max(4)?.1, ratio(1, 3));
    let (g6, d6) = delta_max(6)?;
    r.check("max delta, n=6", d6, ratio(1, 2));
    r.require(
        "n=6 maximizer is K3,3",
        fv(&g6.whitney_complex()) == FVector::from_counts([6, 9])
            && (0..6).all(|v| g6.degree(v) == 3),
    );
    for n in 1..=10i64 {
        let b = Family::CompleteBipartite(n as usize, n as usize).build()?;
        r.check(&format!("delta(K{n},{n})"), delta(&b), ratio(n - 1, n + 1));
    }
    Ok(())
}

fn binomial(n: usize, k: usize) -> BigUint {
    (0..k).fold(BigUint::one(), |acc, i| acc * (n - i) / (i + 1))
}

fn invariants(r: &mut Report, opts: &Options) -> Result<()> {
    let corpus: Vec<Complex> = (0..opts.samples)
        .map(|s| random_complex_seeded(7, 1 + (s % 6) as usize, opts.seed.wrapping_add(s)))
        .collect();
    let half = ratio(1, 2);
    for (s, g) in corpus.iter().enumerate() {
        let f = fv(g);
        let avg = dim_avg_plus(&f);
        let ind = dim_plus(g);
        let simplex = g.facets().len() <= 1;
        r.require(
            &format!("sample {s}: dim+/2 <= Dim+"),
            ind.clone() * &half <= avg,
        );
        r.require(
            &format!("sample {s}: equality iff simplex"),
            (ind * &half == avg) == simplex,
        );
        let poly = f.gen_poly();
        r.check(
            &format!("sample {s}: f(1)"),
            poly.eval(&int(1)),
            int(g.len() as i64 + 1),
        );
        r.check(
            &format!("sample {s}: f(-1)"),
            poly.eval(&int(-1)),
            int(genus(&f)),
        );
        r.check(
            &format!("sample {s}: genus"),
            genus(&f),
            (1 - euler_characteristic(g)).into(),
        );
        let (lhs, rhs) = sphere_genus_sum(g);
        r.check(&format!("sample {s}: sphere-genus sum"), lhs, rhs);

        let h = &corpus[(s * 7 + 3) % corpus.len()];
        if g.len() * h.len() <= 400 {
            let j = join(g, h);
            let fj = fv(&j);
            r.check(
                &format!("sample {s}: Dim+ of join"),
                dim_avg_plus(&fj),
                avg.clone() + dim_avg_plus(&fv(h)),
            );
            r.check(
                &format!("sample {s}: dim+ of join"),
                dim_plus(&j),
                dim_plus(g) + dim_plus(h),
            );
            r.check(
                &format!("sample {s}: genus of join"),
                genus(&fj),
                genus(&f) * genus(&fv(h)),
            );
        }
        if g.len() <= 40 {
            r.check(
                &format!("sample {s}: refinement f-vector"),
                fv(&refine(g)?),
                refine_fvector(&f),
            );
        }
    }
    for family in [Family::Octahedron, Family::Icosahedron] {
        let g = family.build()?;
        let g1 = refine(&g)?;
        for (label, c) in [(family.to_string(), &g), (format!("refined {family}"), &g1)] {
            r.check(
                &format!("f(-1/2) for {label}"),
                fv(c).gen_poly().eval(&ratio(-1, 2)),
                BigRational::zero(),
            );
        }
    }
    Ok(())
}

fn oracle(r: &mut Report, opts: &Options) -> Result<()> {
    let kk = check_against_compression(opts.max_augmented)?;
    r.checked += kk.checked;
    r.failures.extend(
        kk.mismatches
            .iter()
            .map(|m| format!("cascade vs compression: {m:?}")),
    );
    let small = check_against_enumeration(5)?;
    r.checked += small.checked;
    r.failures.extend(
        small
            .mismatches
            .iter()
            .map(|m| format!("cascade vs enumeration: {m:?}")),
    );
    for g in all_complexes(5)? {
        r.check(
            &format!("refinement of {:?}", g.faces()),
            fv(&refine(&g)?),
            refine_fvector(&fv(&g)),
        );
    }
    Ok(())
}
