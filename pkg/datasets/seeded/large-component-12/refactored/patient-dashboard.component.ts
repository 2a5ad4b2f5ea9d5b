import { Component } from '@angular/core';

@Component({
  selector: 'app-patient-dashboard',
  template: `<app-patient-load-panel></app-patient-load-panel><app-patient-log-panel></app-patient-log-panel><app-patient-chart-panel></app-patient-chart-panel>`
})
export class PatientDashboardComponent {}
