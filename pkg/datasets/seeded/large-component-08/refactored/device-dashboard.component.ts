import { Component } from '@angular/core';

@Component({
  selector: 'app-device-dashboard',
  template: `<app-device-load-panel></app-device-load-panel><app-device-log-panel></app-device-log-panel><app-device-chart-panel></app-device-chart-panel>`
})
export class DeviceDashboardComponent {}
