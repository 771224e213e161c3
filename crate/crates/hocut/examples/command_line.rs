//! The command line runs in-process too; output goes to any writer.

fn main() {
    let golden = concat!(env!("CARGO_MANIFEST_DIR"), "/golden/reflexivity.hc");
    let runs: [&[&str]; 3] = [
        &["hocut", "check", golden],
        &["hocut", "schema", "leibniz@o", "--context", "{~ (a == b @ o)}", "--cutformula", "c"],
        &["hocut", "bench", "iterdef", "--calculus", "Gb", "--without-cut", "--sizes", "1,2"],
    ];
    for args in runs {
        let mut out = Vec::new();
        let code = hocut::cli::run(args.iter().copied(), &mut out, &mut std::io::stderr());
        println!("$ {}\n{}exit={code}\n", args[1..].join(" "), String::from_utf8_lossy(&out));
    }
}
