use std::process::ExitCode;

fn main() -> ExitCode {
    let precision = std::env::var_os(mhs_verify::cli::PRECISION_ENV);
    let code = mhs_verify::cli::run(std::env::args_os(), precision, &mut std::io::stdout(), &mut std::io::stderr());
    ExitCode::from(u8::try_from(code).unwrap_or(2))
}
