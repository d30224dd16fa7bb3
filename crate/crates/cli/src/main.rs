use clap::error::ErrorKind;
use clap::Parser;

use cohomlen::error::{CliError, EXIT_DATA, EXIT_USAGE};
use cohomlen::{emit, run, Cli};

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help/--version are successes, everything else is usage
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                std::process::exit(0);
            }
            eprintln!("E_USAGE: {e}");
            std::process::exit(EXIT_USAGE);
        }
    };

    match run(&cli.command) {
        Ok((rendered, exit)) => {
            if let Err(e) = emit(cli.command.args(), &rendered) {
                fail(e);
            }
            if exit == EXIT_DATA {
                eprintln!("E_DATA: report carries validation violations");
            }
            std::process::exit(exit);
        }
        Err(e) => fail(e),
    }
}

fn fail(e: CliError) -> ! {
    eprintln!("{e}");
    std::process::exit(e.exit);
}
