//! The division trace in full: step columns, sign strategies, and the
//! two equivalent ways to read the answer off the table.
//!
//! ```bash
//! cargo run --example dayan_trace
//! ```

use modinv::dayan::{ext_inverse_sum_f, ext_inverse_sum_fraction, run_trace, SignStrategy};
use modinv::render::{render_trace, TraceFormat};
use num_bigint::BigInt;

fn main() {
    let (p, q, a) = (BigInt::from(189), BigInt::from(106), BigInt::from(1));

    // All-plus signs: the classical remainder chain of 189 and 106.
    let trace = run_trace(&p, &q, &a, &SignStrategy::AllPlus).unwrap();
    println!("(106^-1)_189 with s_i = +1:\n");
    print!("{}", render_trace(&trace, TraceFormat::Markdown));
    println!(
        "\nsum f_i*beta_i            = {}",
        ext_inverse_sum_f(&trace).unwrap()
    );
    println!(
        "sum p*gamma_i/(r_i-1 r_i) = {}",
        ext_inverse_sum_fraction(&trace).unwrap()
    );

    // Mixed signs shorten the chain; the value does not move.
    let strategy: SignStrategy = "explicit:-1,-1,-1,+1".parse().unwrap();
    let trace = run_trace(&p, &q, &a, &strategy).unwrap();
    println!("\nsame task with signs -1,-1,-1,+1:\n");
    print!("{}", render_trace(&trace, TraceFormat::Markdown));
    println!(
        "\nsum f_i*beta_i = {} in {} steps",
        ext_inverse_sum_f(&trace).unwrap(),
        trace.sum_steps().unwrap()
    );

    // Least-absolute-remainder picks each sign greedily.
    let trace = run_trace(&p, &q, &a, &SignStrategy::LeastAbsoluteRemainder).unwrap();
    println!("\nleast-absolute-remainder chain, as TSV:\n");
    print!("{}", render_trace(&trace, TraceFormat::Tsv));
    println!(
        "\nvalue = {}, division steps = {}",
        ext_inverse_sum_f(&trace).unwrap(),
        trace.sum_steps().unwrap()
    );
}
