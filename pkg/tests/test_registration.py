"""Command registration, sub-parsers & dispatch."""

from argparse                           import ArgumentParser

import pytest

from gradatim.commands.version.__args__ import VersionConfig
from gradatim.exceptions                import UsageError
from gradatim.registration              import COMMAND_REGISTRY, Command, CommandNameMismatchError, \
                                               CommandRegistry, DuplicateCommandError, \
                                               InvalidExitCodeError, UnknownCommandError


class TestDiscovery:

    def test_every_command_is_registered(self):
        assert COMMAND_REGISTRY.ids == ["ablate", "evaluate", "generate", "train", "version"]
        assert "train" in COMMAND_REGISTRY and len(COMMAND_REGISTRY) == 5

    def test_unknown_is_a_usage_error(self):
        with pytest.raises(UnknownCommandError, match = "choose from ablate") as error:
            COMMAND_REGISTRY.get("fit")

        assert isinstance(error.value, UsageError)


class TestCommand:

    @pytest.fixture
    def registry(self) -> CommandRegistry:
        return CommandRegistry()

    def test_duplicates(self, registry):
        registry.add(Command("version", VersionConfig, lambda **kwargs: 0))

        with pytest.raises(DuplicateCommandError):
            registry.add(Command("version", VersionConfig, lambda **kwargs: 0))

    def test_dispatch_passes_arguments(self, registry):
        seen =  {}

        def entry_point(**kwargs):
            seen.update(kwargs)

        registry.add(Command("version", VersionConfig, entry_point))

        assert registry.dispatch("version", out_dir = "runs", progress = False) == 0
        assert seen == {"out_dir": "runs", "progress": False}

    def test_exit_codes_must_be_integers(self, registry):
        registry.add(Command("version", VersionConfig, lambda **kwargs: "done"))

        with pytest.raises(InvalidExitCodeError):
            registry.dispatch("version")

    def test_name_must_match_configuration(self):
        subparsers =    ArgumentParser().add_subparsers(dest = "command")

        with pytest.raises(CommandNameMismatchError):
            Command("about", VersionConfig, lambda **kwargs: 0).add_parser(subparsers)

    def test_sub_parser(self):
        parser =        ArgumentParser()
        subparsers =    parser.add_subparsers(dest = "command")

        Command("version", VersionConfig, lambda **kwargs: 0).add_parser(subparsers)

        assert parser.parse_args(["version"]).command == "version"
