//! End-to-end acceptance checks, one line of output per criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use menage_core::exactalg::{binomial, factorial, ExactInt, ExactRat, LaurentPoly};
use menage_core::menage::{
    laplace_identity_check, menage_egf_coeffs, menage_eigen_recurrence, menage_inclusion_exclusion, touchard,
    MenageUVPair,
};
use menage_core::oracle::brute_force;
use menage_core::ternary::{
    b2_trace_coefficient, diagonal_coefficient, egf_rational_term_by_closed_series,
    egf_rational_term_by_expansion, ternary_via_b2, ternary_via_diagonal,
};
use menage_core::transfer::{pattern_count, seatings_via_transfer, PolyMatrix};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check, Option<Duration>);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq(got: &ExactInt, want: &ExactInt, what: &str) -> Check {
    ensure(got == want, || format!("{what}: got {got}, want {want}"))
}

fn classical_table() -> Check {
    let table: [u64; 8] = [0, 0, 12, 96, 3120, 115200, 5836320, 382072320];
    for (i, &w) in table.iter().enumerate() {
        let (n, w) = (i + 1, ExactInt::from(w));
        eq(&touchard(n), &w, &format!("touchard({n})"))?;
        eq(&menage_inclusion_exclusion(n), &w, &format!("inclusion-exclusion({n})"))?;
        eq(&seatings_via_transfer(2, n).map_err(|e| e.to_string())?, &w, &format!("transfer({n})"))?;
        eq(&menage_eigen_recurrence(n), &w, &format!("eigen({n})"))?;
    }
    Ok(())
}

fn ternary_table() -> Check {
    let table: [u64; 7] = [0, 8, 84, 3456, 219120, 19281600, 2324085120];
    for (i, &w) in table.iter().enumerate() {
        let (n, w) = (i + 1, ExactInt::from(w));
        let err = |e: menage_core::Error| e.to_string();
        eq(&seatings_via_transfer(3, n).map_err(err)?, &w, &format!("transfer({n})"))?;
        eq(&ternary_via_b2(n).map_err(err)?, &w, &format!("b2({n})"))?;
        eq(&ternary_via_diagonal(n).map_err(err)?, &w, &format!("diagonal({n})"))?;
    }
    Ok(())
}

fn normalized_rows() -> Check {
    let rows: [(&str, usize, &[u64]); 3] = [
        ("A000179", 2, &[0, 0, 1, 2, 13, 80, 579, 4738, 43387, 439792]),
        ("A094047", 2, &[0, 0, 2, 12, 312, 9600, 416880, 23879520]),
        ("A114939", 3, &[0, 1, 7, 216, 10956, 803400, 83003040]),
    ];
    for (name, k, want) in rows {
        for (i, &w) in want.iter().enumerate() {
            let n = i + 1;
            let raw = seatings_via_transfer(k, n).map_err(|e| e.to_string())?;
            let divisor = match name {
                "A000179" => factorial(n as u64) * ExactInt::from(2),
                "A094047" => ExactInt::from(2 * n),
                _ => ExactInt::from(4 * n),
            };
            ensure((&raw % &divisor).is_zero(), || format!("{name}({n}): {raw} not divisible by {divisor}"))?;
            eq(&(raw / divisor), &ExactInt::from(w), &format!("{name}({n})"))?;
        }
    }
    Ok(())
}

fn pattern_lemma() -> Check {
    for n in 2..=10usize {
        for j in 0..=n {
            let (n2, j64) = (2 * n as u64, j as u64);
            let want = binomial(n2 - j64, j64) * n2 * ExactInt::from(2) / ExactInt::from(n2 - j64);
            let got = pattern_count(2, n, j).map_err(|e| e.to_string())?;
            eq(&got, &want, &format!("pattern_count(2, {n}, {j})"))?;
        }
    }
    Ok(())
}

fn laplace_suite() -> Check {
    let pair = MenageUVPair::classical();
    for n in 0..=8 {
        let ok = laplace_identity_check(&pair.u, &pair.v, n).map_err(|e| e.to_string())?;
        ensure(ok, || format!("classical pair fails at n = {n}"))?;
    }
    let mut rng = StdRng::seed_from_u64(20_160_901);
    for case in 0..50 {
        let dim = rng.gen_range(1..=3);
        let n = rng.gen_range(0..=6);
        let mut random = || PolyMatrix::from_fn(dim, |_, _| LaurentPoly::from_int(rng.gen_range(-3..=3)));
        let (u, v) = (random(), random());
        let ok = laplace_identity_check(&u, &v, n).map_err(|e| e.to_string())?;
        ensure(ok, || format!("random case {case} fails: U = {u}, V = {v}, n = {n}"))?;
    }
    Ok(())
}

fn oracle_equivalence() -> Check {
    let mut cases: Vec<(usize, usize)> = (2..=4).flat_map(|k| (1..=4).map(move |n| (k, n))).collect();
    cases.extend([(2, 5), (3, 5)]);
    for (k, n) in cases {
        let bf = brute_force(k, n).map_err(|e| e.to_string())?;
        let tr = seatings_via_transfer(k, n).map_err(|e| e.to_string())?;
        eq(&tr, &bf, &format!("k = {k}, n = {n}"))?;
    }
    Ok(())
}

fn diagonal_identity() -> Check {
    for n in 2..=8 {
        let diag = diagonal_coefficient(n).map_err(|e| e.to_string())?;
        let trace = b2_trace_coefficient(n);
        ensure(diag == trace, || format!("n = {n}: diagonal {diag} vs trace {trace}"))?;
    }
    Ok(())
}

fn egf_series() -> Check {
    let coeffs = menage_egf_coeffs(15);
    for (n, c) in coeffs.iter().enumerate() {
        let got = c * ExactRat::from_integer(factorial(n as u64));
        let want = ExactRat::from_integer(touchard(n));
        ensure(got == want, || format!("egf·n! at n = {n}: {got} vs {want}"))?;
    }
    for t_order in 0..=12 {
        let a = egf_rational_term_by_expansion(12, t_order).map_err(|e| e.to_string())?;
        let b = egf_rational_term_by_closed_series(12, t_order).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("rational term paths differ at t order {t_order}"))?;
    }
    Ok(())
}

fn new_terms() -> Check {
    for n in 1..=64usize {
        let t = seatings_via_transfer(3, n).map_err(|e| e.to_string())?;
        if n >= 2 {
            ensure((&t % (4 * n)).is_zero(), || format!("4n does not divide T_{n} = {t}"))?;
        }
    }
    Ok(())
}

fn cli_contract() -> Check {
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_menage"))
            .args(args)
            .env_remove("MENAGE_CACHE")
            .output()
            .map_err(|e| e.to_string())
    };
    let out = run(&[
        "compute", "--seq", "A114939", "--from", "1", "--to", "7", "--method", "transfer", "--format",
        "bfile",
    ])?;
    let want = "1 0\n2 1\n3 7\n4 216\n5 10956\n6 803400\n7 83003040\n";
    ensure(out.status.success() && out.stdout == want.as_bytes(), || {
        format!("b-file output was {:?}", String::from_utf8_lossy(&out.stdout))
    })?;
    let codes = [
        (
            &[
                "verify",
                "--k",
                "2",
                "--n-max",
                "12",
                "--methods",
                "touchard,transfer,eigen,inclusion-exclusion",
            ][..],
            0,
        ),
        (&["verify", "--k", "3", "--n-max", "10", "--methods", "transfer,b2,diagonal"], 0),
        (&["verify", "--k", "3", "--n-max", "4", "--methods", "transfer,bruteforce"], 0),
        (&["verify", "--k", "3", "--n-max", "4", "--methods", "transfer"], 2),
        (&["verify", "--k", "2", "--n-max", "4", "--methods", "transfer,b2"], 2),
        (&["verify", "--k", "2", "--n-max", "4", "--methods", "nonsense,transfer"], 2),
    ];
    for (args, code) in codes {
        let out = run(args)?;
        ensure(out.status.code() == Some(code), || {
            format!("{args:?} exited with {:?}, want {code}", out.status.code())
        })?;
    }
    // exit 1 needs disagreeing methods; every shipped pair agrees, so the
    // mismatch path is exercised through the library report instead
    let report = menage_cli::verify(2, 1, 3, &[menage_cli::Method::Touchard, menage_cli::Method::Transfer])
        .map_err(|e| e.to_string())?;
    ensure(report.all_agree(), || "touchard and transfer disagree".into())?;
    ensure(menage_cli::Failure::Mismatch(String::new()).exit_code() == 1, || "mismatch must exit 1".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("classical table, four methods", classical_table, Some(Duration::from_secs(5))),
        ("ternary table, three methods", ternary_table, Some(Duration::from_secs(30))),
        ("normalized rows", normalized_rows, None),
        ("pattern count closed form", pattern_lemma, None),
        ("Laplace identity suite", laplace_suite, None),
        ("brute-force oracle equivalence", oracle_equivalence, Some(Duration::from_secs(120))),
        ("diagonal equals B2 trace", diagonal_identity, None),
        ("EGF series", egf_series, None),
        ("T_n for n <= 64 with 4n | T_n", new_terms, Some(Duration::from_secs(60))),
        ("CLI contract", cli_contract, None),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let mut result = check();
        let elapsed = start.elapsed();
        if let (Ok(()), Some(limit)) = (&result, limit) {
            if elapsed > limit {
                result = Err(format!("took {elapsed:?}, limit {limit:?}"));
            }
        }
        match result {
            Ok(()) => println!("PASS {:>2} {name} ({:.2?})", i + 1, elapsed),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name} ({:.2?}): {e}", i + 1, elapsed);
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
