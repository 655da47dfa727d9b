"""Published p-values and h-decisions for the rank t-test comparison.

48 rows of (metric, method-pair, model, p-value, (h at 0.05, 0.2, 0.35)).
"""

TABLE1 = [
    ("IoU", "NEA_NEA/BIC_BIC", "DeepLab/R50", 0.5185, (0, 0, 0)),
    ("IoU", "NEA_NEA/BIC_BIC", "SEGNET", 0.8512, (0, 0, 0)),
    ("IoU", "NEA_NEA/BIC_BIC", "UNET", 0.0249, (1, 1, 1)),
    ("IoU", "NEA_NEA/BIL_BIL", "DeepLab/R50", 0.8203, (0, 0, 0)),
    ("IoU", "NEA_NEA/BIL_BIL", "SEGNET", 0.4676, (0, 0, 0)),
    ("IoU", "NEA_NEA/BIL_BIL", "UNET", 0.2746, (0, 0, 1)),
    ("IoU", "NEA_NEA/NEA_BIC", "DeepLab/R50", 0.0161, (1, 1, 1)),
    ("IoU", "NEA_NEA/NEA_BIC", "SEGNET", 0.8416, (0, 0, 0)),
    ("IoU", "NEA_NEA/NEA_BIC", "UNET", 0.3739, (0, 0, 0)),
    ("IoU", "NEA_NEA/NEA_BIL", "DeepLab/R50", 1.0000, (0, 0, 0)),
    ("IoU", "NEA_NEA/NEA_BIL", "SEGNET", 1.0000, (0, 0, 0)),
    ("IoU", "NEA_NEA/NEA_BIL", "UNET", 0.0705, (0, 1, 1)),
    ("Accuracy", "NEA_NEA/BIC_BIC", "DeepLab/R50", 0.1012, (0, 1, 1)),
    ("Accuracy", "NEA_NEA/BIC_BIC", "SEGNET", 0.8512, (0, 0, 0)),
    ("Accuracy", "NEA_NEA/BIC_BIC", "UNET", 0.0006, (1, 1, 1)),
    ("Accuracy", "NEA_NEA/BIL_BIL", "DeepLab/R50", 0.6213, (0, 0, 0)),
    ("Accuracy", "NEA_NEA/BIL_BIL", "SEGNET", 0.8149, (0, 0, 0)),
    ("Accuracy", "NEA_NEA/BIL_BIL", "UNET", 0.0241, (1, 1, 1)),
    ("Accuracy", "NEA_NEA/NEA_BIC", "DeepLab/R50", 0.8025, (0, 0, 0)),
    ("Accuracy", "NEA_NEA/NEA_BIC", "SEGNET", 0.6530, (0, 0, 0)),
    ("Accuracy", "NEA_NEA/NEA_BIC", "UNET", 0.5185, (0, 0, 0)),
    ("Accuracy", "NEA_NEA/NEA_BIL", "DeepLab/R50", 0.5614, (0, 0, 0)),
    ("Accuracy", "NEA_NEA/NEA_BIL", "SEGNET", 0.8512, (0, 0, 0)),
    ("Accuracy", "NEA_NEA/NEA_BIL", "UNET", 0.0132, (1, 1, 1)),
    ("meanBFScore", "NEA_NEA/BIC_BIC", "DeepLab/R50", 0.6779, (0, 0, 0)),
    ("meanBFScore", "NEA_NEA/BIC_BIC", "SEGNET", 0.2943, (0, 0, 1)),
    ("meanBFScore", "NEA_NEA/BIC_BIC", "UNET", 0.0668, (0, 1, 1)),
    ("meanBFScore", "NEA_NEA/BIL_BIL", "DeepLab/R50", 1.0000, (0, 0, 0)),
    ("meanBFScore", "NEA_NEA/BIL_BIL", "SEGNET", 0.7780, (0, 0, 0)),
    ("meanBFScore", "NEA_NEA/BIL_BIL", "UNET", 0.7247, (0, 0, 0)),
    ("meanBFScore", "NEA_NEA/NEA_BIC", "DeepLab/R50", 0.3295, (0, 0, 1)),
    ("meanBFScore", "NEA_NEA/NEA_BIC", "SEGNET", 0.6087, (0, 0, 0)),
    ("meanBFScore", "NEA_NEA/NEA_BIC", "UNET", 0.2051, (0, 0, 1)),
    ("meanBFScore", "NEA_NEA/NEA_BIL", "DeepLab/R50", 0.8203, (0, 0, 0)),
    ("meanBFScore", "NEA_NEA/NEA_BIL", "SEGNET", 0.5072, (0, 0, 0)),
    ("meanBFScore", "NEA_NEA/NEA_BIL", "UNET", 1.0000, (0, 0, 0)),
    ("DiceScore", "NEA_NEA/BIC_BIC", "DeepLab/R50", 0.5185, (0, 0, 0)),
    ("DiceScore", "NEA_NEA/BIC_BIC", "SEGNET", 0.8512, (0, 0, 0)),
    ("DiceScore", "NEA_NEA/BIC_BIC", "UNET", 0.0249, (1, 1, 1)),
    ("DiceScore", "NEA_NEA/BIL_BIL", "DeepLab/R50", 0.8203, (0, 0, 0)),
    ("DiceScore", "NEA_NEA/BIL_BIL", "SEGNET", 0.4676, (0, 0, 0)),
    ("DiceScore", "NEA_NEA/BIL_BIL", "UNET", 0.2746, (0, 0, 1)),
    ("DiceScore", "NEA_NEA/NEA_BIC", "DeepLab/R50", 0.0161, (1, 1, 1)),
    ("DiceScore", "NEA_NEA/NEA_BIC", "SEGNET", 0.8416, (0, 0, 0)),
    ("DiceScore", "NEA_NEA/NEA_BIC", "UNET", 0.3739, (0, 0, 0)),
    ("DiceScore", "NEA_NEA/NEA_BIL", "DeepLab/R50", 1.0000, (0, 0, 0)),
    ("DiceScore", "NEA_NEA/NEA_BIL", "SEGNET", 1.0000, (0, 0, 0)),
    ("DiceScore", "NEA_NEA/NEA_BIL", "UNET", 0.0705, (0, 1, 1)),
]

ALPHAS = (0.05, 0.2, 0.35)
