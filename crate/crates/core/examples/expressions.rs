//! The expression language and the command driver used by `qheis`.

use qheisenberg::{cli, ScalarContext};

fn main() -> qheisenberg::Result<()> {
    let t = ScalarContext::torsion(5)?;
    for e in [
        "A*B - q*B*A",
        "[A,B]^2*A",
        "[[B,A],A]",
        "B^2*A",
        "q^7*A + 2/3*[C, B]",
    ] {
        let x = cli::normalize(e, &t)?;
        println!("{e:<22} => {x}");
    }
    match cli::parse_expression("[A, B") {
        Ok(_) => unreachable!(),
        Err(e) => println!("error: {e}"),
    }

    let mut out = std::io::stdout();
    let code = cli::run(
        ["qheis", "--p", "2", "--format", "json", "construct", "C^3"],
        &mut out,
        &mut std::io::stderr(),
    );
    println!("exit code {code}");
    Ok(())
}
