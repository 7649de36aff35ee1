import json, time, torch
from irstd_diff.data import SynthSpec, synth_dataset
from irstd_diff.trainer import TrainConfig, train, load_checkpoint, models_from_checkpoint, evaluate_model
from irstd_diff.diffusion import strided_timesteps

t0 = time.time()
train_set = synth_dataset(SynthSpec(count=200, resolution=64, seed=100, id_prefix="tr"))
test_set = synth_dataset(SynthSpec(count=50, resolution=64, seed=200, id_prefix="te"))

cfg = TrainConfig(steps=3500, batch=8, seed=0, scale_factor=4, resolution=64,
                  beta_start=1e-3, beta_end=0.2,
                  checkpoint_interval=500, eval_interval=500, eval_count=12,
                  log_interval=10)
records = train(cfg, train_set, ".exp/run3", eval_dataset=test_set)
print(f"train time: {(time.time()-t0)/60:.1f} min", flush=True)

payload = load_checkpoint(".exp/run3/last.pt")
_, _, enc, den, sched = models_from_checkpoint(payload)
rep, _ = evaluate_model(enc, den, sched, test_set, seed=0, with_roc=True)
print(f"FULL:    IoU {rep.iou:.3f} Pd {rep.pd:.3f} Fa {rep.fa:.2e} AUC {rep.auc:.3f}", flush=True)
rep60, _ = evaluate_model(enc, den, sched, test_set, seed=0, timesteps=strided_timesteps(100, 60))
print(f"STRIDE60: IoU {rep60.iou:.3f} Pd {rep60.pd:.3f} Fa {rep60.fa:.2e}", flush=True)
for n in (3, 5):
    repn, _ = evaluate_model(enc, den, sched, test_set, seed=0, ensemble=n)
    print(f"ENS n={n}: IoU {repn.iou:.3f} Pd {repn.pd:.3f} Fa {repn.fa:.2e}", flush=True)
