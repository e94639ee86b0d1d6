"""Command-line interface for GENESIS experiments."""

import sys
import argparse
from pathlib import Path
from typing import List, Optional

# Add src to path to allow imports
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from src.application.use_cases.generate_report import GenerateReportUseCase
from src.application.use_cases.run_experiment import RunExperimentUseCase
from src.application.dto.run_request import GridRequest, ReportRequest, RerunRequest, RunRequest
from src.infrastructure.config.settings import configure_app, get_settings
from src.shared.constants.app_constants import Algorithm, ExitCodes


def main(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point; returns the process exit code."""
    parser = create_argument_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return ExitCodes.USAGE_ERROR

    settings = get_settings()
    if getattr(args, "debug", False):
        settings.debug_mode = True
    configure_app(settings)

    print(f"🔧 {settings.app_name} v{settings.version}")
    print("=" * 50)

    try:
        if args.command == 'run':
            return handle_run_command(args)
        elif args.command == 'grid':
            return handle_grid_command(args)
        elif args.command == 'rerun':
            return handle_rerun_command(args)
        elif args.command == 'report':
            return handle_report_command(args)
        print(f"❌ Unknown command: {args.command}")
        parser.print_help()
        return ExitCodes.USAGE_ERROR

    except KeyboardInterrupt:
        print("\n⚠️ Operation cancelled by user")
        return ExitCodes.UNEXPECTED_ERROR
    except Exception as e:
        print(f"❌ Error: {str(e)}")
        return ExitCodes.UNEXPECTED_ERROR


def create_argument_parser():
    """Create the command line argument parser."""
    algorithms = [a.value for a in Algorithm]
    parser = argparse.ArgumentParser(
        description="GENESIS SFC embedding experiments",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s run --scenario 32_1_A_10_2 --algorithm genesis --seed 1
  %(prog)s grid --algorithm gda --stage 1
  %(prog)s rerun --manifest results/genesis/32_1_A_10_2/1/manifest.json
  %(prog)s report --in results
        """
    )

    subparsers = parser.add_subparsers(dest='command', help='Available commands')

    run_parser = subparsers.add_parser('run', help='Run one scenario')
    run_parser.add_argument('--scenario', required=True, help='Scenario name, e.g. 48_1_B_5_0.5')
    run_parser.add_argument('--algorithm', required=True, choices=algorithms)
    run_parser.add_argument('--seed', type=int, nargs='+', default=[0],
                            help='One or more seeds')
    run_parser.add_argument('--population-size', type=int,
                            help='Override the GENESIS population size')
    run_parser.add_argument('--max-generations', type=int, help='Override max generations')
    _add_common_arguments(run_parser)

    grid_parser = subparsers.add_parser('grid', help='Sweep the scenario grid')
    grid_parser.add_argument('--algorithm', required=True, choices=algorithms)
    grid_parser.add_argument('--seeds', type=int, nargs='+', default=[0])
    grid_parser.add_argument('--stage', type=int, choices=[1, 2],
                             help='Only the 32-SFCR (1) or 48-SFCR (2) scenarios')
    _add_common_arguments(grid_parser)

    rerun_parser = subparsers.add_parser('rerun', help='Reproduce a run from its manifest')
    rerun_parser.add_argument('--manifest', type=Path, required=True)
    rerun_parser.add_argument('--out', type=Path, help='Results directory for the rerun')

    report_parser = subparsers.add_parser('report', help='Summarise runs')
    report_parser.add_argument('--in', dest='input_dir', type=Path, required=True,
                               help='Results directory to summarise')
    report_parser.add_argument('--out', type=Path, help='Where to write the summary files')

    return parser


def _add_common_arguments(subparser) -> None:
    subparser.add_argument('--config', type=Path, help='INI config file')
    subparser.add_argument('--out', type=Path, help='Results directory')
    subparser.add_argument('--debug', action='store_true', help='Also write the topology')


def _print_messages(response) -> None:
    for error in response.errors:
        print(f"   • {error}")
    for warning in response.warnings:
        print(f"⚠️  {warning}")


def handle_run_command(args) -> int:
    """Handle the run command."""
    use_case = RunExperimentUseCase()
    overrides = {}
    if args.population_size is not None:
        overrides.setdefault('evolution', {})['population_size'] = args.population_size
    if args.max_generations is not None:
        overrides.setdefault('evolution', {})['max_generations'] = args.max_generations

    exit_code = ExitCodes.SUCCESS
    for seed in args.seed:
        print(f"🚀 Running {args.algorithm} on {args.scenario} (seed {seed})...")
        request = RunRequest(
            scenario=args.scenario,
            algorithm=args.algorithm,
            seed=seed,
            config_file=args.config,
            output_directory=args.out,
            overrides=overrides,
            debug=args.debug,
        )
        response = use_case.execute(request)

        if response.success:
            record = response.record
            status = "✅ Converged" if record.converged else "⚠️ Not converged"
            print(f"{status} after {record.generations_used} generations")
            print(f"📊 AR {record.final_ar:.3f}, latency {record.final_avg_latency:.2f} ms, "
                  f"{record.evaluations} evaluations")
            print(f"📁 {response.run_directory}")
            if response.execution_time_seconds:
                print(f"⏱️  Processing time: {response.execution_time_seconds:.2f} seconds")
        else:
            print("❌ Run failed!")
            exit_code = ExitCodes.USAGE_ERROR
        _print_messages(response)
    return exit_code


def handle_grid_command(args) -> int:
    """Handle the grid command."""
    print(f"🚀 Sweeping the grid with {args.algorithm}...")
    request = GridRequest(
        algorithm=args.algorithm,
        seeds=list(args.seeds),
        stage=args.stage,
        config_file=args.config,
        output_directory=args.out,
        debug=args.debug,
    )
    response = RunExperimentUseCase().run_grid(request)

    if response.success:
        print(f"✅ {len(response.records)} runs, {response.converged_count} converged")
        if response.failed_runs:
            print(f"❌ {len(response.failed_runs)} runs failed")
        if response.execution_time_seconds:
            print(f"⏱️  Processing time: {response.execution_time_seconds:.2f} seconds")
    else:
        print("❌ Grid failed!")
    _print_messages(response)
    return ExitCodes.SUCCESS if response.success else ExitCodes.USAGE_ERROR


def handle_rerun_command(args) -> int:
    """Handle the rerun command."""
    print(f"🔄 Rerunning {args.manifest}...")
    response = RunExperimentUseCase().rerun(
        RerunRequest(manifest_file=args.manifest, output_directory=args.out)
    )

    if response.success:
        reproduced = response.metadata.get('reproduced')
        if reproduced is True:
            print("✅ Run reproduced exactly")
        elif reproduced is None:
            print("✅ Run completed (no stored record to compare)")
        print(f"📁 {response.run_directory}")
    else:
        print("❌ Rerun failed!")
    _print_messages(response)
    return ExitCodes.SUCCESS if response.success else ExitCodes.USAGE_ERROR


def handle_report_command(args) -> int:
    """Handle the report command."""
    print(f"📊 Summarising runs in {args.input_dir}...")
    response = GenerateReportUseCase().execute(
        ReportRequest(input_directory=args.input_dir, output_directory=args.out)
    )

    if response.success:
        print(response.summary.to_string(index=False))
        if response.stage2_eligible:
            print(f"🎯 Eligible for stage 2: {', '.join(response.stage2_eligible)}")
        print(f"📄 Generated {len(response.generated_files)} files:")
        for file_path in response.generated_files:
            print(f"   • {file_path}")
    else:
        print("❌ Report generation failed!")
    _print_messages(response)
    return ExitCodes.SUCCESS if response.success else ExitCodes.USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
