//! Driving the command line from code: the same reports `flagsig` prints,
//! as JSON or aligned text.

use flagsig::cli::{execute, run_to_strings, CheckOptions, Request};

fn main() {
    let (code, out, _) =
        run_to_strings(["flagsig", "el", "--vars", "x,y", "--map", "x^2-y^2,2*x*y"]);
    println!("exit {code}\n{out}");

    let req = Request::Flag {
        vars: "x,y".into(),
        f: "x^4+y^5+x^2*y^2".into(),
        map: None,
    };
    match execute(
        &req,
        CheckOptions {
            seed: 3,
            trials: 10,
        },
    ) {
        Ok(outcome) => println!("{}", outcome.report.render_json()),
        Err(f) => eprintln!("exit {}: {}", f.code, f.message),
    }

    let (code, _, err) = run_to_strings(["flagsig", "el", "--vars", "x,y", "--map", "x*y,x*y"]);
    print!("exit {code}: {err}");
}
