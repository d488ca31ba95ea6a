"""# gradatim.training.trainer

Alternating optimization across paces: sample weights under a fixed model, then backbone gradient 
steps and leaf updates under fixed weights.
"""

__all__ =   [
                "Trainer",
                "evaluate",
                "train",
                "weighted_gradient_epoch",
            ]

from logging                            import Logger
from math                               import isfinite
from typing                             import List, Optional, Tuple

from numpy                              import asarray, concatenate, flatnonzero, float64, ndarray, ones
from numpy.random                       import Generator
from tqdm                               import tqdm

from gradatim.backbone                  import BackboneParams, NonFiniteGradientError, SGDOptimizer
from gradatim.configuration.exceptions  import InvalidConfigValueError
from gradatim.datasets                  import Dataset
from gradatim.exceptions                import UsageError
from gradatim.forest                    import ForestModel, LikelihoodResult, \
                                               NoEffectiveSamplesError, update_leaves
from gradatim.metrics                   import cumulative_score, mae
from gradatim.selection                 import SelectionState, advance_pace, \
                                               curriculum_reconstruction, first_pace
from gradatim.training.config           import TrainConfig
from gradatim.training.exceptions       import DivergenceError
from gradatim.training.gradient         import GradientResult, objective_and_gradient
from gradatim.training.report           import EvaluationResult, PaceRecord, TrainReport
from gradatim.utilities                 import get_logger, make_generator, spawn_generators

# Initialize logger.
LOGGER:             Logger =    get_logger("trainer")

# Mean batch loss beyond which training is aborted.
DIVERGENCE_LIMIT:   float =     1e8


def weighted_gradient_epoch(
    model:              ForestModel,
    x:                  ndarray,
    y:                  ndarray,
    weights:            ndarray,
    optimizer:          SGDOptimizer,
    steps:              int,
    rng:                Generator,
    batch_size:         int =           32,
    gamma:              float =         0.0,
    entropy_gradient:   bool =          False,
    pace:               int =           0,
    first_step:         int =           0,
    progress:           Optional[tqdm] = None
) -> BackboneParams:
    """# Ascend Σ v log p_F with Mini-Batch SGD.

    Batches are drawn from samples with v > 0 in a seeded permutation, renewed whenever it is 
    exhausted. Each step ascends the batch objective divided by the batch size.

    ## Args:
        * model             (ForestModel):      Forest whose backbone is updated in place.
        * x                 (ndarray):          Inputs [N × D_x].
        * y                 (ndarray):          Targets [N].
        * weights           (ndarray):          Sample weights v [N].
        * optimizer         (SGDOptimizer):     Optimizer state.
        * steps             (int):              Number of gradient steps.
        * rng               (Generator):        Batch order generator.
        * batch_size        (int):              Samples per step. Defaults to 32.
        * gamma             (float):            Entropy coefficient. Defaults to 0.
        * entropy_gradient  (bool):             Ascend γ Σ v H as well. Defaults to False.
        * pace              (int):              Pace number, for diagnostics. Defaults to 0.
        * first_step        (int):              Step offset within the pace, for diagnostics.
        * progress          (tqdm):             Progress bar advanced once per step.

    ## Raises:
        * NoEffectiveSamplesError:  If every weight is zero.
        * DivergenceError:          If the loss explodes or the backbone becomes non-finite.

    ## Returns:
        * BackboneParams:   The updated backbone.
    """
    v:          ndarray =   asarray(weights, dtype = float64)
    active:     ndarray =   flatnonzero(v > 0)

    if active.size == 0: raise NoEffectiveSamplesError(sample_count = len(v))

    order:      ndarray =   rng.permutation(active)
    cursor:     int =       0

    for step in range(first_step, first_step + steps):

        # Renew the permutation once every selected sample was visited.
        if cursor >= len(order): order, cursor = rng.permutation(active), 0

        batch:  ndarray =   order[cursor:cursor + batch_size]
        cursor +=           len(batch)

        result: GradientResult =    objective_and_gradient(
                                        model =             model,
                                        x =                 x[batch],
                                        y =                 y[batch],
                                        weights =           v[batch],
                                        gamma =             gamma,
                                        entropy_gradient =  entropy_gradient
                                    )

        loss:   float =     -result.objective / len(batch)

        if not isfinite(loss) or abs(loss) > DIVERGENCE_LIMIT:
            raise DivergenceError(pace = pace, step = step, loss = loss)

        try:
            optimizer.ascend(model.backbone, result.gradients.scaled(1.0 / len(batch)))

        except NonFiniteGradientError:
            LOGGER.warning(f"Pace {pace}, step {step}: non-finite gradient, step skipped")

        if not model.backbone.is_finite: raise DivergenceError(pace = pace, step = step, loss = loss)

        if progress is not None: progress.update(1)

    return model.backbone


def evaluate(
    model:      ForestModel,
    dataset:    Dataset,
    cs_level:   float =         5.0
) -> EvaluationResult:
    """# MAE, Cumulative Score & Mean Entropy of a Model.

    ## Args:
        * model     (ForestModel):  Forest to evaluate.
        * dataset   (Dataset):      Non-empty evaluation set.
        * cs_level  (float):        Error level L of the cumulative score. Defaults to 5.

    ## Returns:
        * EvaluationResult: Metrics.
    """
    if dataset.num_samples == 0: raise UsageError("Cannot evaluate on an empty dataset")

    routing =   model.route(dataset.x)
    preds:      ndarray =   model.predict(dataset.x, routing = routing)

    return  EvaluationResult(
                mae =           mae(preds, dataset.y),
                cs =            cumulative_score(preds, dataset.y, cs_level),
                mean_entropy =  float(model.entropy(dataset.x, routing = routing).mean()),
                n_samples =     dataset.num_samples
            )


class Trainer:
    """# Self-Paced Deep Regression Forest Trainer."""

    def __init__(self,
        config:     TrainConfig,
        cs_level:   float =         5.0,
        progress:   bool =          True
    ):
        """# Instantiate Trainer.

        ## Args:
            * config    (TrainConfig):  Training configuration; mode normalization is applied.
            * cs_level  (float):        Error level for per-pace cumulative scores. Defaults to 5.
            * progress  (bool):         Show progress bars on standard error. Defaults to True.
        """
        # Initialize logger.
        self.__logger__:    Logger =        get_logger("trainer")

        # Define properties.
        self._config_:      TrainConfig =   config.resolved()
        self._cs_level_:    float =         cs_level
        self._progress_:    bool =          progress

        if self._config_.mode == "SPUDRF" and self._config_.pace.weighting == "hard":
            self.__logger__.warning("SPUDRF with hard weighting is an experimental variant")

    # PROPERTIES ===================================================================================

    @property
    def config(self) -> TrainConfig:
        """# Effective Training Configuration"""
        return self._config_

    # METHODS ======================================================================================

    def train(self,
        train_set:  Dataset,
        test_set:   Optional[Dataset] = None
    ) -> Tuple[ForestModel, TrainReport]:
        """# Train a Forest.

        Warmup fits the model on every sample with unit weights. Each pace then ranks the current 
        samples, computes weights, appends curriculum duplicates (which take their original's 
        weight), and alternates gradient steps with leaf updates, starting from the previous 
        pace's parameters.

        ## Args:
            * train_set (Dataset):  Non-empty training samples.
            * test_set  (Dataset):  Held-out samples, used only for evaluation after each pace.

        ## Returns:
            * ForestModel:  Trained model.
            * TrainReport:  One record per pace.
        """
        cfg:            TrainConfig =       self._config_

        self._validate_(train_set)

        # Independent streams: backbone, one per tree, batch order, leaf mini-batches.
        streams:        List[Generator] =   spawn_generators(cfg.seed, cfg.forest.tree_count + 3)
        self._batch_rng_:   Generator =     streams[-2]
        self._leaf_rng_:    Generator =     streams[-1]

        model:          ForestModel =       ForestModel.initialize(
                                                input_dim =         train_set.feature_dim,
                                                targets =           train_set.y,
                                                backbone_config =   cfg.backbone,
                                                forest_config =     cfg.forest,
                                                generators =        streams[:-2]
                                            )

        self._optimizer_:   SGDOptimizer =  SGDOptimizer(
                                                learning_rate = cfg.optimizer.learning_rate,
                                                decay_factor =  cfg.optimizer.decay_factor,
                                                decay_every =   cfg.optimizer.decay_every
                                            )

        report:         TrainReport =       TrainReport(mode = cfg.mode, config = cfg.to_dict())

        self.__logger__.info(
            f"Training {cfg.mode} on {train_set.num_samples} samples "
            f"({cfg.pace.pace_count} paces, seed {cfg.seed})"
        )

        # Warmup on every sample.
        report.warmup = {
                            "steps":        cfg.warmup_steps,
                            "batch_seed":   self._fit_(
                                                model =     model,
                                                dataset =   train_set,
                                                weights =   ones(train_set.num_samples),
                                                steps =     cfg.warmup_steps,
                                                pace =      0,
                                                gamma =     0.0,
                                                warm =      True
                                            )
                        }

        current:        Dataset =           train_set
        state:          SelectionState =    None

        for pace in range(1, cfg.pace.pace_count + 1):

            # Rank every current sample under the current model.
            likelihood: LikelihoodResult =  model.log_likelihood(current.x, current.y)
            entropies:  ndarray =           model.entropy(current.x, routing = likelihood.routing)

            if likelihood.floored.any():
                self.__logger__.warning(
                    f"Pace {pace}: {int(likelihood.floored.sum())} samples at the log-density floor"
                )

            state =     first_pace(cfg.pace, likelihood.values, entropies, current.ids) if state is None \
                        else advance_pace(state, cfg.pace, likelihood.values, entropies, current.ids)

            weights:    ndarray =           state.weights
            ranked:     int =               current.num_samples

            # Duplicate high-uncertainty samples, inheriting their original's weight.
            if cfg.pace.curriculum_count or cfg.pace.curriculum_threshold is not None:
                current =   curriculum_reconstruction(current, entropies, cfg.pace)
                weights =   concatenate((
                                weights,
                                weights[current.position_of(current.origin_ids[ranked:])]
                            ))

            seed:       int =               self._fit_(
                                                model =     model,
                                                dataset =   current,
                                                weights =   weights,
                                                steps =     cfg.optimizer.steps_per_pace,
                                                pace =      pace,
                                                gamma =     state.gamma,
                                                warm =      False
                                            )

            record:     PaceRecord =        PaceRecord(
                                                pace =          pace,
                                                lam =           state.lam,
                                                lam_prime =     state.lam_prime,
                                                gamma =         state.gamma,
                                                zeta =          state.zeta,
                                                fraction =      state.fraction,
                                                score_shift =   state.score_shift,
                                                n_samples =     ranked,
                                                n_selected =    state.n_selected,
                                                n_soft =        state.n_soft,
                                                n_zero =        state.n_zero,
                                                n_duplicates =  current.num_samples - ranked,
                                                n_floored =     int(likelihood.floored.sum()),
                                                batch_seed =    seed,
                                                train =         evaluate(model, train_set, self._cs_level_),
                                                test =          evaluate(model, test_set, self._cs_level_)
                                                                if test_set is not None and test_set.num_samples
                                                                else None,
                                                leaves =        model.leaf_snapshot()
                                            )

            report.paces.append(record)

            self.__logger__.info(
                f"Pace {pace}/{cfg.pace.pace_count}: selected {record.n_selected}/{ranked} "
                f"(soft {record.n_soft}), gamma {record.gamma}, train MAE {record.train.mae:.4f}"
                + (f", test MAE {record.test.mae:.4f}" if record.test else "")
            )

        return model, report

    # HELPERS ======================================================================================

    def _fit_(self,
        model:      ForestModel,
        dataset:    Dataset,
        weights:    ndarray,
        steps:      int,
        pace:       int,
        gamma:      float,
        warm:       bool
    ) -> int:
        """# Alternate Gradient Steps & Leaf Updates under Fixed Weights.

        ## Args:
            * model     (ForestModel):  Forest updated in place.
            * dataset   (Dataset):      Current samples.
            * weights   (ndarray):      Sample weights [N].
            * steps     (int):          Gradient steps to take.
            * pace      (int):          Pace number (0 for warmup).
            * gamma     (float):        Entropy coefficient of the pace.
            * warm      (bool):         Fit the leaves before the first gradient step.

        ## Returns:
            * int:  Seed of the batch order.
        """
        cfg:        TrainConfig =   self._config_
        seed:       int =           int(self._batch_rng_.integers(2 ** 63))
        rng:        Generator =     make_generator(seed)
        interval:   int =           cfg.optimizer.leaf_update_interval or max(steps, 1)

        if warm or steps == 0: self._update_leaves_(model, dataset, weights)

        with tqdm(
            total =     steps,
            desc =      "Warmup" if pace == 0 else f"Pace {pace}",
            unit =      "step",
            leave =     False,
            disable =   not self._progress_ or steps == 0
        ) as progress:

            for start in range(0, steps, interval):

                weighted_gradient_epoch(
                    model =             model,
                    x =                 dataset.x,
                    y =                 dataset.y,
                    weights =           weights,
                    optimizer =         self._optimizer_,
                    steps =             min(interval, steps - start),
                    rng =               rng,
                    batch_size =        cfg.optimizer.batch_size,
                    gamma =             gamma,
                    entropy_gradient =  cfg.entropy_gradient,
                    pace =              pace,
                    first_step =        start,
                    progress =          progress
                )

                self._update_leaves_(model, dataset, weights)

        return seed

    def _update_leaves_(self,
        model:      ForestModel,
        dataset:    Dataset,
        weights:    ndarray
    ) -> None:
        """# Run One Leaf Update Round & Install the Result."""
        model.assign_leaves(update_leaves(
            model =         model,
            x =             dataset.x,
            y =             dataset.y,
            weights =       weights,
            config =        self._config_.leaves,
            rng =           self._leaf_rng_,
            batch_size =    self._config_.optimizer.batch_size
        ))

    def _validate_(self,
        train_set:  Dataset
    ) -> None:
        """# Check the Training Set against the Configuration."""
        if train_set.num_samples == 0: raise UsageError("Training set is empty")

        pace =  self._config_.pace

        if pace.curriculum_threshold is None and pace.curriculum_count > train_set.num_samples:
            raise InvalidConfigValueError(
                "trainer.pace.curriculum_count",
                pace.curriculum_count,
                f"exceeds the {train_set.num_samples} training samples"
            )

    # DUNDERS ======================================================================================

    def __repr__(self) -> str:
        """# Trainer Object Representation"""
        return f"""<Trainer(mode = {self._config_.mode}, seed = {self._config_.seed})>"""


def train(
    config:     TrainConfig,
    train_set:  Dataset,
    test_set:   Optional[Dataset] = None,
    cs_level:   float =             5.0,
    progress:   bool =              False
) -> Tuple[ForestModel, TrainReport]:
    """# Train a Forest with a One-Off Trainer.

    ## Args:
        * config    (TrainConfig):  Training configuration.
        * train_set (Dataset):      Training samples.
        * test_set  (Dataset):      Held-out samples for per-pace evaluation.
        * cs_level  (float):        Error level of the cumulative score. Defaults to 5.
        * progress  (bool):         Show progress bars. Defaults to False.

    ## Returns:
        * ForestModel:  Trained model.
        * TrainReport:  Per-pace report.
    """
    return Trainer(config = config, cs_level = cs_level, progress = progress).train(train_set, test_set)
