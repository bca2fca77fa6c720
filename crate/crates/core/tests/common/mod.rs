//! Shared golden values and checks for the integration tests and the
//! acceptance harness.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use tablecount::enumerate::coefficient;
use tablecount::oracle::{brute_count, brute_enumerate};
use tablecount::{
    count, count_with, gale_ryser_feasible, BigCount, CountOptions, MarginSpec, Mode,
    RandomSource, SamplerContext,
};

pub const TOY_ROWS: [u32; 4] = [2, 2, 1, 1];
pub const TOY_COLS: [u32; 3] = [3, 2, 1];

pub const FINCH_ROWS: [u32; 13] = [14, 13, 14, 10, 12, 2, 10, 1, 10, 11, 6, 2, 17];
pub const FINCH_COLS: [u32; 17] = [4, 4, 11, 10, 10, 8, 9, 10, 8, 9, 3, 10, 4, 7, 9, 3, 3];
pub const FINCH_COUNT: &str = "67149106137567626";

pub const GULF_ROWS: [u32; 23] = [
    14, 14, 14, 12, 5, 13, 9, 11, 11, 11, 11, 11, 7, 8, 8, 7, 2, 4, 2, 3, 2, 2, 2,
];
pub const GULF_COLS: [u32; 15] = [21, 19, 18, 19, 14, 15, 12, 15, 12, 12, 12, 5, 4, 4, 1];
pub const GULF_COUNT: &str = "839926782939601640";

pub const CALIFORNIA_ROWS: [u32; 31] = [
    1, 4, 3, 2, 1, 1, 1, 5, 1, 3, 1, 4, 4, 5, 1, 2, 1, 5, 4, 5, 3, 7, 1, 3, 2, 4, 1, 3, 2, 4, 6,
];
pub const CALIFORNIA_COLS: [u32; 8] = [2, 14, 24, 8, 2, 5, 20, 15];
pub const CALIFORNIA_COUNT: &str = "1360641571195211109388";

pub const BIG_ROWS: &str = "70 30 20 10 5^6 4^10 3^20 2^60";
pub const BIG_COLS: &str = "4^80 3^20";

pub const BIG_BINARY: &str = concat!(
    "860585058801817078819959949756041558231879514104670757612387",
    "280341919502865086909993523205599348663646837362726765460951",
    "032776118129432733489342067673016169716787054236343091407458",
    "802261593735765113169808512677339861494709092492858489355535",
    "514748397544147637928475318462070009855280569561693514768239",
    "201499080842592443823774161366680107327323365049702068246736",
    "456919918589686056321467354298509024976141650428747522863473",
    "529515269318246400000000000000000000000",
);

pub const BIG_NATURAL: &str = concat!(
    "620017488391049592297896956531192562528805388295441812965295",
    "130897484012791595142882674755488640101825726867156331426482",
    "441148514978852842582445295040041143220637964258279947442682",
    "896809706562683189375098411751981435132377208717294759756041",
    "358372207736032818841045369779439398975681041714752821787419",
    "816573563436066161167632677774184809010338787868042742993719",
    "703936093873250600121874335524794990013547042810153560084573",
    "133035731217642637607153615611029851392000000000000000000000",
    "000",
);

pub const H4: [&str; 3] = ["24", "282", "2008"];
pub const H5: [&str; 6] = ["120", "6210", "153040", "2224955", "22069251", "164176640"];
pub const H6: [&str; 10] = [
    "720",
    "202410",
    "20933840",
    "1047649905",
    "30767936616",
    "602351808741",
    "8575979362560",
    "94459713879600",
    "842286559093240",
    "6292583664553881",
];
pub const H7: [&str; 15] = [
    "5040",
    "9135630",
    "4662857360",
    "936670590450",
    "94161778046406",
    "5562418293759978",
    "215717608046511873",
    "5945968652327831925",
    "123538613356253145400",
    "2023270039486328373811",
    "27046306550096288483238",
    "303378141987182515342992",
    "2920054336492521720572276",
    "24563127009195223721952590",
    "183343273080700916973016745",
];
pub const H8: [&str; 21] = [
    "40320",
    "545007960",
    "1579060246400",
    "1455918295922650",
    "569304690994400256",
    "114601242382721619224",
    "13590707419428422843904",
    "1046591482728407939338275",
    "56272722406349235035916800",
    "2233160342369825596702148720",
    "68316292103293669997188919040",
    "1667932098862773837734823042196",
    "33427469280977307618866364694400",
    "562798805673342016752366344185200",
    "8115208977465404874100226492575360",
    "101857066150530294146428615917957029",
    "1128282526405022554049557329097252992",
    "11161302946841260178530673680176000200",
    "99613494890126594335550124219924540800",
    "809256770610540675454657517194018680846",
    "6031107989875562751266116901999327710720",
];

/// `H_4` coefficients, constant term first, as `(numerator, denominator)`.
pub const H4_COEFFICIENTS: [(i64, i64); 10] = [
    (1, 1),
    (65, 18),
    (379, 63),
    (35117, 5670),
    (43, 10),
    (1109, 540),
    (2, 3),
    (19, 135),
    (11, 630),
    (11, 11340),
];

pub fn big(s: &str) -> BigCount {
    s.parse().expect("decimal literal")
}

pub fn spec(rows: &[u32], cols: &[u32]) -> MarginSpec {
    MarginSpec::new(rows.to_vec(), cols.to_vec())
}

pub fn toy() -> MarginSpec {
    spec(&TOY_ROWS, &TOY_COLS)
}

pub fn h_table(n: usize) -> &'static [&'static str] {
    match n {
        4 => &H4,
        5 => &H5,
        6 => &H6,
        7 => &H7,
        8 => &H8,
        _ => panic!("no table for n = {n}"),
    }
}

pub fn h4_coefficients() -> Vec<BigRational> {
    H4_COEFFICIENTS
        .iter()
        .map(|&(a, b)| BigRational::new(a.into(), b.into()))
        .collect()
}

/// Random margins with `1..=max_dim` rows and columns and entries in
/// `0..=max_entry`. Half are read off a random matrix (so feasible in that
/// mode), the rest are independent vectors nudged toward a common total.
#[allow(clippy::needless_range_loop)]
pub fn random_margins(rng: &mut StdRng, max_dim: usize, max_entry: u32, mode: Mode) -> MarginSpec {
    let m = rng.random_range(1..=max_dim);
    let n = rng.random_range(1..=max_dim);
    if rng.random_bool(0.5) {
        let cell = match mode {
            Mode::Binary => 1,
            Mode::Natural => max_entry,
        };
        // fill cells with whatever room the margin caps leave
        let mut rows = vec![0u32; m];
        let mut cols = vec![0u32; n];
        for i in 0..m {
            for j in 0..n {
                let room = cell.min(max_entry - rows[i]).min(max_entry - cols[j]);
                let x = rng.random_range(0..=room);
                rows[i] += x;
                cols[j] += x;
            }
        }
        return MarginSpec::new(rows, cols);
    }
    let rows: Vec<u32> = (0..m).map(|_| rng.random_range(0..=max_entry)).collect();
    let mut cols: Vec<u32> = (0..n).map(|_| rng.random_range(0..=max_entry)).collect();
    let target: u32 = rows.iter().sum();
    // nudge the columns toward the row total
    for _ in 0..64 {
        let total: u32 = cols.iter().sum();
        let j = rng.random_range(0..n);
        if total < target && cols[j] < max_entry {
            cols[j] += 1;
        } else if total > target && cols[j] > 0 {
            cols[j] -= 1;
        }
    }
    MarginSpec::new(rows, cols)
}

/// Deterministic corpus of random margins.
pub fn corpus(seed: u64, len: usize, max_dim: usize, max_entry: u32, mode: Mode) -> Vec<MarginSpec> {
    use rand::SeedableRng;
    let mut rng = StdRng::seed_from_u64(seed);
    (0..len)
        .map(|_| random_margins(&mut rng, max_dim, max_entry, mode))
        .collect()
}

/// DP and brute force disagree on these margins.
pub fn oracle_mismatch(spec: &MarginSpec, mode: Mode) -> Option<String> {
    let (dp, _) = count(spec, mode);
    let brute = brute_count(spec, mode).expect("within the oracle envelope");
    (dp != brute).then(|| format!("{spec:?} {mode:?}: dp {dp} brute {brute}"))
}

/// Every recorded state has weight equal to the remaining row mass, and
/// every expanded state's count is the sum of its child weights.
pub fn table_identities(spec: &MarginSpec, mode: Mode) -> Result<(), String> {
    let (_, table) = count(spec, mode);
    for (j, r, value) in table.entries() {
        if r.weight() != table.remaining_mass(j) {
            return Err(format!("level {j} state {r:?} has weight {} != {}", r.weight(), table.remaining_mass(j)));
        }
        if j == table.rows() {
            if !value.is_one() {
                return Err(format!("terminal state {r:?} holds {value}"));
            }
            continue;
        }
        if table.is_pruned(j, r) {
            if !value.is_zero() {
                return Err(format!("pruned state {r:?} holds {value}"));
            }
            continue;
        }
        let mut sum = BigCount::zero();
        for s in table.compositions(j, r) {
            let child = r.reduce(&s).map_err(|e| e.to_string())?;
            let sub = table
                .get(j + 1, &child)
                .ok_or_else(|| format!("child {child:?} of ({j}, {r:?}) missing"))?;
            let c = coefficient(r, &s, mode, table.binomials()).map_err(|e| e.to_string())?;
            sum += c * sub;
        }
        if &sum != value {
            return Err(format!("({j}, {r:?}): children sum {sum} != {value}"));
        }
    }
    Ok(())
}

/// Gale-Ryser decides existence exactly as the brute force does.
pub fn gale_ryser_agrees(spec: &MarginSpec) -> Result<(), String> {
    let brute = brute_count(spec, Mode::Binary).expect("within the oracle envelope");
    let gr = spec.is_balanced() && gale_ryser_feasible(spec.row_sums(), &spec.counts_vector());
    if gr != !brute.is_zero() {
        return Err(format!("{spec:?}: gale-ryser {gr}, brute {brute}"));
    }
    Ok(())
}

/// Counts are unchanged by transposition, row and column permutation, and
/// by switching Gale-Ryser pruning off; natural counts dominate binary ones.
pub fn symmetries(spec: &MarginSpec, rng: &mut StdRng) -> Result<(), String> {
    use rand::seq::SliceRandom;
    let mut binary = None;
    for mode in [Mode::Binary, Mode::Natural] {
        let (base, _) = count(spec, mode);
        let (t, _) = count(&spec.transposed(), mode);
        if t != base {
            return Err(format!("{spec:?} {mode:?}: transpose {t} != {base}"));
        }
        let mut rows = spec.row_sums().to_vec();
        let mut cols = spec.col_sums().to_vec();
        rows.shuffle(rng);
        cols.shuffle(rng);
        let (p, _) = count(&MarginSpec::new(rows, cols), mode);
        if p != base {
            return Err(format!("{spec:?} {mode:?}: permuted {p} != {base}"));
        }
        let (plain, _) = count_with(spec, mode, CountOptions { gale_ryser: false });
        if plain != base {
            return Err(format!("{spec:?} {mode:?}: unpruned {plain} != {base}"));
        }
        match mode {
            Mode::Binary => binary = Some(base),
            Mode::Natural => {
                let b = binary.take().expect("binary first");
                if base < b {
                    return Err(format!("{spec:?}: natural {base} < binary {b}"));
                }
            }
        }
    }
    Ok(())
}

/// Draws satisfy the margins (and the binary domain), and a fixed seed
/// reproduces the same draws.
pub fn sample_exactness(spec: &MarginSpec, mode: Mode, seed: u64, draws: usize) -> Result<(), String> {
    let ctx = match SamplerContext::prepare(spec, mode) {
        Ok(ctx) => ctx,
        Err(_) => return Ok(()),
    };
    let first = ctx.draw_many(&mut RandomSource::seed_from_u64(seed), draws);
    let again = ctx.draw_many(&mut RandomSource::seed_from_u64(seed), draws);
    if first != again {
        return Err(format!("{spec:?} {mode:?}: seed {seed} is not reproducible"));
    }
    for m in &first {
        if !spec.is_satisfied_by(m) {
            return Err(format!("{spec:?} {mode:?}: draw {m:?} misses the margins"));
        }
        if mode == Mode::Binary && m.iter().flatten().any(|&x| x > 1) {
            return Err(format!("{spec:?}: binary draw {m:?} has a large entry"));
        }
    }
    Ok(())
}

/// Frequencies of the oracle's matrices among `draws` samples.
pub struct Histogram {
    pub counts: Vec<u64>,
    pub draws: u64,
}

impl Histogram {
    pub fn expected(&self) -> f64 {
        self.draws as f64 / self.counts.len() as f64
    }

    pub fn chi_square(&self) -> f64 {
        let e = self.expected();
        self.counts.iter().map(|&c| (c as f64 - e).powi(2) / e).sum()
    }

    pub fn max_deviation(&self) -> f64 {
        let e = self.expected();
        self.counts
            .iter()
            .map(|&c| (c as f64 - e).abs())
            .fold(0.0, f64::max)
    }
}

pub fn histogram(spec: &MarginSpec, mode: Mode, seed: u64, draws: u64) -> Histogram {
    let list = brute_enumerate(spec, mode).expect("within the oracle envelope");
    let ctx = SamplerContext::prepare(spec, mode).expect("feasible margins");
    assert_eq!(BigCount::from(list.len()), *ctx.total());
    let mut rng = RandomSource::seed_from_u64(seed);
    let mut counts = vec![0u64; list.len()];
    for _ in 0..draws {
        let m = ctx.draw(&mut rng);
        let at = list.position(&m).expect("every draw is a listed matrix");
        counts[at] += 1;
    }
    Histogram { counts, draws }
}

/// Upper `p` critical value of the chi-square distribution.
pub fn chi_square_critical(df: usize, p: f64) -> f64 {
    ChiSquared::new(df as f64).expect("positive df").inverse_cdf(1.0 - p)
}

/// Checks the fitted `H_n` against the direct counts: integer values on
/// `[-n-k+1, k+5]`, agreement with direct counts at `k+1` and `k+2`,
/// zeros at `-1..-(n-1)`, reciprocity, and a nonzero top coefficient.
pub fn ehrhart_checks(n: usize) -> Result<(), String> {
    use tablecount::ehrhart::{degree, direct_values, ehrhart_polynomial, h_value};
    let (poly, _) = ehrhart_polynomial(n);
    let k = direct_values(n) as i64;
    let nn = n as i64;
    let d = degree(n);
    if poly.degree() != d || poly.coefficients()[d].is_zero() {
        return Err(format!("H_{n}: degree {} leading {}", poly.degree(), poly.coefficients()[d]));
    }
    if !poly.coefficients()[0].is_one() {
        return Err(format!("H_{n}(0) = {}", poly.coefficients()[0]));
    }
    for x in (1 - nn - k)..=(k + 5) {
        let v = poly.evaluate(x);
        if !v.is_integer() {
            return Err(format!("H_{n}({x}) = {v} is not an integer"));
        }
        if (1..nn).contains(&-x) && !v.is_zero() {
            return Err(format!("H_{n}({x}) = {v}, expected 0"));
        }
        let mirror = poly.evaluate(-nn - x);
        let sign = if d % 2 == 1 { -BigRational::one() } else { BigRational::one() };
        if mirror != sign * &v {
            return Err(format!("H_{n}({}) = {mirror} breaks reciprocity with H_{n}({x}) = {v}", -nn - x));
        }
    }
    for r in [k + 1, k + 2] {
        let direct = BigRational::from_integer(BigInt::from(h_value(n, r as u32)));
        if poly.evaluate(r) != direct {
            return Err(format!("H_{n}({r}): polynomial {} != direct {direct}", poly.evaluate(r)));
        }
    }
    Ok(())
}
