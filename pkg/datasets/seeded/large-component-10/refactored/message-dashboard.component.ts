import { Component } from '@angular/core';

@Component({
  selector: 'app-message-dashboard',
  template: `<app-message-load-panel></app-message-load-panel><app-message-log-panel></app-message-log-panel><app-message-chart-panel></app-message-chart-panel>`
})
export class MessageDashboardComponent {}
